#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/diffops.hpp"
#include "superkoszul/lie.hpp"
#include "superkoszul/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superkoszul {

struct SuiteOptions {
    int max_word_length = 12;
    /// Cohomological window for the sl(1|1) Ext tables: the classical and
    /// Weyl monad tables use [0, window_hi], the complete table
    /// [window_lo, window_hi].
    int window_lo = -8;
    int window_hi = 8;
    bool verify_all = false;
};

struct NamedCheck {
    std::string name;
    std::function<CheckResult()> run;
};

/// Runs checks on up to `jobs` threads. Results keep declaration order; a
/// WindowTooSmall or BoundTooSmall error marks the check unreliable-window,
/// any other error fails it.
Report run_checks(const std::vector<NamedCheck>& checks, int jobs);

std::vector<NamedCheck> sign_checks();
std::vector<NamedCheck> lie_checks();
/// With `xy_oracle` the dims per degree must equal the Hilbert function of
/// k[x, y]/(xy).
std::vector<NamedCheck> ce_checks(const LieSuperalgebra& g, const std::string& label, int max_degree, bool xy_oracle = false);
std::vector<NamedCheck> curvature_checks();
std::vector<NamedCheck> cobar_checks();
std::vector<NamedCheck> twisted_tensor_checks();
std::vector<NamedCheck> spencer_checks(const std::vector<std::pair<std::string, SuperSpace>>& spaces);
std::vector<NamedCheck> morita_checks(const std::vector<int>& qs);
std::vector<NamedCheck> koszul_moment_checks(const LieSuperalgebra& g, const std::string& label, int max_degree);
std::vector<NamedCheck> sl11_checks(const SuiteOptions& o);

/// Completion, relations and the Hilbert table of a presentation.
std::vector<NamedCheck> presentation_checks(const Presentation& p, int max_word_length);
std::vector<NamedCheck> hilbert_checks(const Presentation& p, int max_word_length);

/// Every built-in check in a fixed order.
std::vector<NamedCheck> full_suite(const SuiteOptions& o);

/// A^{1|0} and A^{1|1} with their pinned windows.
std::vector<std::pair<std::string, SuperSpace>> default_spencer_spaces();

}  // namespace superkoszul

#include "superkoszul/io.hpp"

#include "superkoszul/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace superkoszul {

using nlohmann::json;

namespace {

template <class F>
auto parse_with(const std::string& text, F&& f)
{
    try {
        return f(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

}  // namespace

Presentation presentation_from_json(const std::string& text)
{
    return parse_with(text, [](const json& in) {
        Presentation p;
        for (const auto& g : in.value("generators", json::array()))
            p.add_generator({g.at("name").get<std::string>(),
                             {g.value("coh", 0), g.value("s", 0), g.value("h", 0)},
                             g.value("weight", 0),
                             g.value("tweight", 0)});
        for (const auto& r : in.value("relations", json::array()))
            p.add_relation(r.get<std::string>());
        for (const auto& name : in.value("invertible", json::array()))
            p.declare_invertible(name.get<std::string>());
        return p;
    });
}

LieSuperalgebra lie_from_json(const std::string& text)
{
    return parse_with(text, [](const json& in) {
        std::vector<LieBasisElement> basis;
        Presentation names;
        for (const auto& b : in.at("basis")) {
            basis.push_back({b.at("name").get<std::string>(), b.value("s", 0)});
            names.add_generator({basis.back().name, {0, basis.back().s, 0}, 0, 0});
        }
        LieSuperalgebra g(basis);
        for (const auto& b : in.value("brackets", json::array())) {
            const int i = g.index_of(b.at("x").get<std::string>());
            const int j = g.index_of(b.at("y").get<std::string>());
            if (i < 0 || j < 0)
                throw Error(ErrorKind::Parse, "bracket of unknown basis elements");
            LieVector v;
            const std::string value = b.at("value").is_string() ? b.at("value").get<std::string>() : std::string("0");
            const Element parsed = names.parse(value);
            for (const auto& [w, c] : parsed.terms()) {
                if (w.size() != 1)
                    throw Error(ErrorKind::Parse, "bracket value '" + value + "' is not linear");
                v[w[0]] += c;
            }
            g.set_bracket(i, j, v);
        }
        return g;
    });
}

SuperSpace space_from_json(const std::string& text)
{
    return parse_with(text, [](const json& in) {
        SuperSpace s;
        for (const auto& c : in.at("coordinates"))
            s.coordinates.push_back({c.at("name").get<std::string>(), c.value("s", 0), c.value("invertible", false), c.value("tweight", 0)});
        return s;
    });
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace superkoszul

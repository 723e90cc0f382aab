#include "latwalk/law_io.hpp"

#include "latwalk/error.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace latwalk {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        raise(Errc::malformed_law_file, std::string("missing field \"") + key + "\" in " + where);
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        raise(Errc::malformed_law_file,
              std::string("field \"") + key + "\" in " + where + " must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

StepLaw law_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(Errc::malformed_law_file, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) raise(Errc::malformed_law_file, "top level must be a JSON object");

    std::int64_t den = require_int(doc, "denominator", "law object");
    if (!doc.contains("atoms") || !doc.at("atoms").is_array())
        raise(Errc::malformed_law_file, "field \"atoms\" must be an array");

    std::vector<StepLaw::Atom> atoms;
    std::size_t i = 0;
    for (const json& a : doc.at("atoms")) {
        std::string where = "atoms[" + std::to_string(i) + "]";
        if (!a.is_object()) raise(Errc::malformed_law_file, where + " must be an object");
        LatticePoint p{require_int(a, "dx", where.c_str()), require_int(a, "dy", where.c_str())};
        std::int64_t w = require_int(a, "weight", where.c_str());
        for (const auto& [q, _] : atoms)
            if (q == p)
                raise(Errc::malformed_law_file, "duplicate atom (dx=" + std::to_string(p.x) +
                                                    ", dy=" + std::to_string(p.y) + ")");
        atoms.emplace_back(p, BigInt(w));
        ++i;
    }
    return StepLaw::validate(std::move(atoms), BigInt(den));
}

StepLaw load_law_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open law file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return law_from_json_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string law_to_json_text(const StepLaw& law) {
    if (!law.denominator().fits_slong_p())
        raise(Errc::io_error, "law denominator does not fit the file format's integer range");
    json atoms = json::array();
    for (const auto& [p, w] : law.atoms()) {
        if (!w.fits_slong_p())
            raise(Errc::io_error, "law weight does not fit the file format's integer range");
        atoms.push_back({{"dx", p.x}, {"dy", p.y}, {"weight", w.get_si()}});
    }
    json doc{{"denominator", law.denominator().get_si()}, {"atoms", atoms}};
    return doc.dump(2) + "\n";
}

void save_law_file(const std::filesystem::path& path, const StepLaw& law) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot write law file " + path.string());
    out << law_to_json_text(law);
    if (!out) raise(Errc::io_error, "failed writing law file " + path.string());
}

StepLaw simple_walk() {
    return StepLaw::validate({{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}, 4);
}

StepLaw lazy_walk() {
    return StepLaw::validate(
        {{{0, 0}, 2}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}, 6);
}

StepLaw long_step_walk() {
    return StepLaw::validate({{{2, 0}, 1},
                              {{-2, 0}, 1},
                              {{0, 2}, 1},
                              {{0, -2}, 1},
                              {{1, 0}, 2},
                              {{-1, 0}, 2},
                              {{0, 1}, 2},
                              {{0, -1}, 2}},
                             12);
}

std::vector<std::pair<std::string, StepLaw>> bundled_laws() {
    return {{"simple", simple_walk()},
            {"lazy", lazy_walk()},
            {"diff_simple", difference_law(simple_walk())},
            {"long_step", long_step_walk()}};
}

std::vector<std::filesystem::path> emit_law_bundle(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) raise(Errc::io_error, "cannot create directory " + dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    for (const auto& [name, law] : bundled_laws()) {
        auto path = dir / (name + ".json");
        save_law_file(path, law);
        written.push_back(path);
    }
    return written;
}

} // namespace latwalk

#include "prenichols/io.hpp"

#include <fstream>

#include "json.hpp"

namespace prenichols {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

BraidingMatrix braiding_from_json(const json& j) {
    if (!j.contains("theta") || !j.contains("entries"))
        throw std::invalid_argument("braiding object needs 'theta' and 'entries'");
    int theta = j.at("theta").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != theta)
        throw std::invalid_argument("'entries' must be a theta x theta array");
    std::vector<std::vector<Scalar>> q;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != theta)
            throw std::invalid_argument("'entries' must be a theta x theta array");
        std::vector<Scalar> r;
        for (const auto& cell : row) r.push_back(parse_scalar(cell.get<std::string>()));
        q.push_back(std::move(r));
    }
    return BraidingMatrix(std::move(q));
}

} // namespace

BraidingMatrix load_braiding_file(const std::string& path) {
    return braiding_from_json(read_json(path));
}

RootDatum load_datum(const std::string& path) {
    json j = read_json(path);
    if (!j.contains("braiding")) {
        // plain braiding file
        return build_datum(braiding_from_json(j));
    }
    BraidingMatrix b = braiding_from_json(j.at("braiding"));
    std::optional<std::vector<DegreeVector>> roots;
    if (j.contains("positive_roots")) {
        std::vector<DegreeVector> rs;
        for (const auto& row : j.at("positive_roots")) {
            std::vector<long long> c;
            for (const auto& x : row) c.push_back(x.get<long long>());
            if (static_cast<int>(c.size()) != b.size())
                throw std::invalid_argument("positive_roots entries must have length theta");
            rs.push_back(DegreeVector(std::move(c)));
        }
        roots = std::move(rs);
    }
    RootDatum d = build_datum(b, roots);

    // optional fields are validated against the computed datum
    if (j.contains("N_beta")) {
        auto want = j.at("N_beta").get<std::vector<long long>>();
        auto have_roots = d.all_positive_roots();
        auto have = d.all_N_beta();
        std::vector<std::pair<DegreeVector, long long>> a, c;
        for (size_t i = 0; i < have.size(); ++i) a.push_back({have_roots[i], have[i]});
        if (!roots || want.size() != roots->size())
            throw std::invalid_argument("'N_beta' must align with 'positive_roots'");
        for (size_t i = 0; i < want.size(); ++i) c.push_back({(*roots)[i], want[i]});
        std::sort(a.begin(), a.end());
        std::sort(c.begin(), c.end());
        if (a != c) throw std::invalid_argument("'N_beta' disagrees with the orders computed from the braiding");
    }
    if (j.contains("cartan_flags")) {
        auto want = j.at("cartan_flags").get<std::vector<bool>>();
        if (!roots || want.size() != roots->size())
            throw std::invalid_argument("'cartan_flags' must align with 'positive_roots'");
        for (size_t i = 0; i < want.size(); ++i)
            if (b.is_cartan_root((*roots)[i]) != want[i])
                throw std::invalid_argument("'cartan_flags' disagrees with the braiding at root " +
                                            format_compact((*roots)[i]));
    }
    if (j.contains("family_tag")) {
        std::string tag = j.at("family_tag").get<std::string>();
        if (d.comps.size() != 1)
            throw std::invalid_argument("'family_tag' is only meaningful for a connected braiding");
        if (family_tag_name(d.comps[0].family) != tag)
            throw std::invalid_argument("family_tag '" + tag + "' does not match recognized '" +
                                        family_tag_name(d.comps[0].family) + "'");
    }
    return d;
}

void save_braiding_file(const std::string& path, const BraidingMatrix& b) {
    json rows = json::array();
    for (int i = 0; i < b.size(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < b.size(); ++j2) row.push_back(b.q(i, j2).str());
        rows.push_back(std::move(row));
    }
    json j{{"theta", b.size()}, {"entries", std::move(rows)}};
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace prenichols

#include "modcomb/cli.hpp"

#include "modcomb/hypersimplex.hpp"
#include "modcomb/series.hpp"
#include "modcomb/strata.hpp"
#include "modcomb/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace modcomb::cli {

json rat_json(const Rat& r) { return to_string(r); }

json rats_json(const RatVec& v)
{
    json a = json::array();
    for (const auto& r : v)
        a.push_back(rat_json(r));
    return a;
}

json int_json(const BigInt& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

json report(const std::string& command, json inputs, json results, json certificates)
{
    return {{"schema", schema_version},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"results", std::move(results)},
            {"certificates", std::move(certificates)}};
}

namespace {

BigInt to_bigint(const json& j)
{
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw InputError("expected an integer, got " + j.dump());
}

template <class Map>
json count_map(const Map& m)
{
    json o = json::object();
    for (const auto& [k, v] : m) {
        std::ostringstream key;
        key << k;
        o[key.str()] = int_json(BigInt(v));
    }
    return o;
}

json subset_json(const hyper::Subset& s) { return json(s); }

json partition_json(const weights::Partition& p) { return json(p); }

json chamber_json(const hyper::Arrangement& a, const hyper::Chamber& c)
{
    json planes = json::array();
    for (std::size_t j = 0; j < a.hyperplanes.size(); ++j)
        if (c.signs[j] == '0')
            planes.push_back(a.hyperplanes[j].label());
    return {{"id", c.id},
            {"dim", c.dim},
            {"signs", c.signs},
            {"witness", rats_json(c.witness)},
            {"on_boundary", c.on_boundary},
            {"planes", planes}};
}

std::string relation_string(geom::Relation r)
{
    return r == geom::Relation::EQ ? "=" : r == geom::Relation::LE ? "<=" : "<";
}

json constraint_json(const geom::LinConstraint& c)
{
    return {{"coeffs", rats_json(c.coeffs)}, {"rel", relation_string(c.rel)}, {"rhs", rat_json(c.constant)}};
}

std::string kind_string(hyper::PolyKind k)
{
    return k == hyper::PolyKind::FULL ? "FULL" : k == hyper::PolyKind::SECTION ? "SECTION" : "CUTS";
}

json note(const std::string& id, json derived, json published, const std::string& resolution)
{
    return {{"id", id}, {"derived", std::move(derived)}, {"published", std::move(published)}, {"resolution", resolution}};
}

void check_n(int n, int lo, int hi)
{
    if (n < lo || n > hi)
        throw InputError("n must satisfy " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

const hyper::Chamber& find_chamber(const std::vector<hyper::Chamber>& chambers, const hyper::Arrangement& a,
                                   const RatVec& x)
{
    if (x.size() != static_cast<std::size_t>(a.n))
        throw InputError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(a.n));
    const auto id = hyper::locate(a, chambers, x);
    if (!id)
        throw InputError("point is not in the hypersimplex");
    return chambers[*id];
}

// ------------------------------------------------------------------- commands

json cmd_chambers(int n, bool interior_only)
{
    check_n(n, 3, hyper::max_n);
    const auto a = hyper::build_arrangement(n);
    const auto chambers = hyper::enumerate_chambers(a);
    json list = json::array();
    std::map<int, long> by_dim;
    long euler = 0;
    for (const auto& c : chambers) {
        euler += c.dim % 2 ? -1 : 1;
        if (interior_only && c.on_boundary)
            continue;
        ++by_dim[c.dim];
        list.push_back(chamber_json(a, c));
    }
    json planes = json::array();
    for (const auto& h : a.hyperplanes)
        planes.push_back(h.label());
    if (euler != 1)
        throw VerificationError("chamber Euler characteristic is " + std::to_string(euler));
    return report("chambers", {{"n", n}, {"interior_only", interior_only}},
                  {{"hyperplanes", planes}, {"chambers", list}},
                  {{"count", list.size()}, {"by_dim", count_map(by_dim)}, {"euler_characteristic", euler}});
}

json cmd_admissible(int n)
{
    check_n(n, 3, hyper::max_n);
    const auto census = hyper::admissible_census(n);
    json list = json::array();
    std::map<std::string, long> by_kind;
    for (const auto& p : census.polytopes) {
        json hrep = json::array();
        for (const auto& c : p.hrep.constraints())
            hrep.push_back(constraint_json(c));
        const auto inner = geom::relative_interior_point(p.hrep);
        if (!inner || !p.interior_contains(*inner))
            throw VerificationError("no interior point for " + p.label());
        ++by_kind[kind_string(p.kind)];
        json subsets = json::array();
        for (const auto& s : p.subsets)
            subsets.push_back(subset_json(s));
        list.push_back({{"id", p.id},
                        {"kind", kind_string(p.kind)},
                        {"label", p.label()},
                        {"subsets", subsets},
                        {"dim", p.dim},
                        {"hrep", hrep},
                        {"interior_point", rats_json(*inner)}});
    }
    json rejected = json::array();
    for (const auto& fam : census.rejected)
        rejected.push_back(fam);
    return report("admissible", {{"n", n}}, {{"polytopes", list}, {"rejected_families", rejected}},
                  {{"count", list.size()}, {"by_kind", count_map(by_kind)}});
}

json cmd_omega(int n, const std::string& point, int chamber_id)
{
    check_n(n, 3, hyper::max_n);
    const auto a = hyper::build_arrangement(n);
    const auto chambers = hyper::enumerate_chambers(a);
    const hyper::Chamber* c = nullptr;
    json inputs = {{"n", n}};
    if (point.empty() == (chamber_id < 0))
        throw InputError("give exactly one of --point and --chamber");
    if (!point.empty()) {
        const RatVec x = parse_rat_list(point);
        c = &find_chamber(chambers, a, x);
        inputs["point"] = rats_json(x);
    } else {
        if (chamber_id < 0 || chamber_id >= static_cast<int>(chambers.size()))
            throw InputError("chamber id out of range");
        c = &chambers[chamber_id];
        inputs["chamber"] = chamber_id;
    }
    const auto polys = hyper::enumerate_admissible(n);
    const auto omega = hyper::omega_set(a, *c, polys);
    json members = json::array();
    for (int id : omega.members)
        members.push_back({{"id", id}, {"label", polys[id].label()}});
    bool inside = true;
    for (int id : omega.members)
        inside = inside && polys[id].interior_contains(c->witness);
    if (!inside)
        throw VerificationError("chamber witness outside a member polytope");
    return report("omega", inputs, {{"chamber", chamber_json(a, *c)}, {"omega", members}},
                  {{"witness_in_every_member", inside},
                   {"lp_certified", omega.lp_certified},
                   {"size", omega.members.size()}});
}

json cmd_stability(const std::string& weights_text, const std::string& partition_text)
{
    const RatVec t = parse_rat_list(weights_text);
    const auto p = weights::parse_partition(partition_text, static_cast<int>(t.size()));
    const auto r = weights::stability(t, p);
    const auto typ = weights::classify_linearisation(t);
    const std::string cmp = r.max_block_sum > 1 ? " > 1" : r.max_block_sum == 1 ? " = 1" : " < 1";
    json typicality = {{"typical", typ.typical}};
    if (!typ.typical)
        typicality["witness"] = typ.witness;
    return report("stability", {{"weights", rats_json(t)}, {"partition", partition_json(p)}},
                  {{"verdict", weights::to_string(r.verdict)}, {"typicality", typicality}},
                  {{"heaviest_block", r.heaviest_block},
                   {"max_block_sum", rat_json(r.max_block_sum)},
                   {"block_rule", to_string(r.max_block_sum) + cmp}});
}

json cmd_xi(int n, const std::string& point)
{
    check_n(n, 4, hyper::max_n);
    const auto a = hyper::build_arrangement(n);
    const auto chambers = hyper::enumerate_chambers(a);
    const RatVec x = parse_rat_list(point);
    const auto& c = find_chamber(chambers, a, x);
    const auto cells = weights::xi(a, c);
    json list = json::array();
    for (const auto& f : cells) {
        if (weights::fine_signs(f.witness) != f.id)
            throw VerificationError("fine cell witness does not realize its sign vector");
        list.push_back({{"id", f.id}, {"dim", f.dim}, {"witness", rats_json(f.witness)}});
    }
    const int k = hyper::zero_pi_count(a, c);
    const auto facets = std::count_if(cells.begin(), cells.end(), [&](const auto& f) { return f.dim == c.dim + 1; });
    json walls = json::array();
    for (const auto& w : weights::fine_walls(n))
        walls.push_back(w);
    return report("xi", {{"n", n}, {"point", rats_json(x)}},
                  {{"chamber", chamber_json(a, c)}, {"fine_walls", walls}, {"cells", list}},
                  {{"size", cells.size()}, {"pi_planes_through_chamber", k}, {"cells_of_dim_plus_one", facets}});
}

json dm_census_json(const strata::DMCensus& c)
{
    json by_codim_type = json::object();
    for (const auto& [codim, types] : c.by_codim_type)
        by_codim_type[std::to_string(codim)] = count_map(types);
    return {{"n", c.n},
            {"total", int_json(c.total)},
            {"by_type", count_map(c.by_type)},
            {"by_codim", count_map(c.by_codim)},
            {"by_codim_type", by_codim_type},
            {"euler_sum", int_json(c.euler_sum)}};
}

json lm_census_json(const strata::LMCensus& c)
{
    return {{"n", c.n},
            {"total", c.total},
            {"by_type", count_map(c.by_type)},
            {"by_dim", count_map(c.by_dim)},
            {"toric_by_dim", count_map(c.toric_by_dim)},
            {"extension_by_dim", count_map(c.extension_by_dim)},
            {"orbits_by_dim", count_map(c.orbits_by_dim)},
            {"euler_sum", int_json(c.euler_sum)}};
}

json lm_notes(int n)
{
    json notes = json::array();
    if (n == 5)
        notes.push_back(note("lm-point-count-n5", 13, {10, 14},
                             "Euler identity 2 - 9 + p = 3! forces p = 13 point strata"));
    return notes;
}

json cmd_strata(const std::string& space, int n, bool list)
{
    if (space == "dm") {
        if (!list)
            return dm_census_report(n);
        check_n(n, 4, strata::max_dm_list_n);
        json trees = json::array();
        for (const auto& t : strata::dm_strata(n))
            trees.push_back({{"clusters", t.clusters}, {"valences", t.valences}, {"codim", t.codim()}, {"type", t.type()}});
        json r = dm_census_report(n);
        r["results"]["strata"] = trees;
        return r;
    }
    if (space == "lm") {
        if (!list)
            return lm_census_report(n);
        json chains = json::array();
        for (const auto& c : strata::lm_strata(n)) {
            json entry = {{"chain", c.to_string()},
                          {"blocks", c.blocks},
                          {"dim", c.dim()},
                          {"type", c.type()},
                          {"label", strata::degeneration_label(c, n).to_string()}};
            entry["outgrowth"] = c.open() ? json(nullptr) : json(strata::to_string(strata::classify_outgrowth(c)));
            chains.push_back(entry);
        }
        json r = lm_census_report(n);
        r["results"]["strata"] = chains;
        return r;
    }
    throw InputError("space must be dm or lm");
}

json cmd_divisors(const std::string& from, const std::string& to)
{
    const RatVec A = parse_rat_list(from), B = parse_rat_list(to);
    const auto divisors = strata::reduction_divisors(A, B);
    const int n = static_cast<int>(A.size());
    json list = json::array();
    std::map<int, long> by_size;
    std::map<std::string, long> by_type;
    for (const auto& d : divisors) {
        ++by_size[static_cast<int>(d.I.size())];
        ++by_type[d.type()];
        list.push_back({{"I", d.I}, {"J", d.J}, {"type", d.type()}, {"b_sum_I", rat_json(d.b_sum_i)}});
    }
    json certs = {{"count", divisors.size()}, {"by_size", count_map(by_size)}, {"by_type", count_map(by_type)}};
    // Against the building-set model when B is of Losev-Manin shape.
    const bool lm_shape = n >= 5 && n <= 7 && B[0] == 1 && B[1] == 1 &&
                          std::all_of(A.begin(), A.end(), [](const Rat& x) { return x == 1; }) &&
                          std::all_of(B.begin() + 2, B.end(), [&](const Rat& x) { return (n - 2) * x <= 1; });
    json r = report("divisors", {{"from", rats_json(A)}, {"to", rats_json(B)}},
                    {{"divisors", list}}, std::move(certs));
    if (lm_shape) {
        std::map<std::string, long> won;
        for (const auto& w : strata::wonderful_divisor_census(n))
            ++won[w.type()];
        const bool match = won == by_type;
        r["certificates"]["building_set_types"] = count_map(won);
        r["certificates"]["building_set_match"] = match;
        if (!match)
            throw VerificationError("reduction divisors differ from the building-set divisors");
        if (n == 7)
            r["notes"] = json::array(
                {note("divisor-type-labels-n7", {{"F4xF5", 10}, {"F5xF4", 5}, {"F6xF3", 1}},
                      {{"F5xF4", 10}, {"F4xF5", 5}}, "factor types follow F_{|I|+1} x F_{|J|+1}"),
                 note("building-set-generators-n7", 10, 9,
                      "all 3-subsets of the five light labels; 30 generator pairs meet in 5 distinct loci, 15 in the "
                      "common point")});
    }
    return r;
}

series::ExpSeries build_series(const std::string& mode, const std::string& coeffs, int order)
{
    if (order < 1 || order > series::max_order)
        throw InputError("order must satisfy 1 <= order <= " + std::to_string(series::max_order));
    const RatVec given = coeffs.empty() ? RatVec{} : parse_rat_list(coeffs);
    series::ExpSeries f;
    f.coeffs.assign(order + 1, Rat(0));
    std::size_t first = 0;
    if (mode == "mult") {
        f.coeffs[0] = 1;
        first = 1;
    } else if (mode == "comp") {
        f.coeffs[1] = 1;
        first = 2;
    } else {
        throw InputError("mode must be mult or comp");
    }
    for (std::size_t i = 0; i < given.size() && first + i <= static_cast<std::size_t>(order); ++i)
        f.coeffs[first + i] = given[i];
    return f;
}

json cmd_invert(const std::string& mode, const std::string& method, const std::string& coeffs, int order)
{
    if (method != "direct" && method != "strata")
        throw InputError("method must be direct or strata");
    const auto f = build_series(mode, coeffs, order);
    const bool mult = mode == "mult";
    const auto direct = mult ? series::mult_inverse_direct(f) : series::comp_inverse_direct(f);
    const auto strata = mult ? series::mult_inverse_permutohedral(f) : series::comp_inverse_strata(f);
    const auto& chosen = method == "direct" ? direct : strata;
    const auto& other = method == "direct" ? strata : direct;
    const bool match = direct == strata;
    const auto back = mult ? series::mult_inverse_direct(chosen) : series::comp_inverse_direct(chosen);
    const bool involution = back == f;
    if (!match || !involution)
        throw VerificationError("inversion certificates failed");
    return report("invert",
                  {{"mode", mode}, {"method", method}, {"order", order}, {"series", rats_json(f.coeffs)}},
                  {{"inverse", rats_json(chosen.coeffs)},
                   {"inverse_ordinary", rats_json(chosen.ordinary())},
                   {"cross_check", rats_json(other.coeffs)}},
                  {{"methods_match", match}, {"involution", involution}});
}

json cmd_verify(const std::string& suite, int n, std::uint64_t seed, bool& all_pass)
{
    const auto checks = verify(suite, n, seed);
    json list = json::array();
    all_pass = true;
    long passed = 0;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all_pass = all_pass && c.pass;
        passed += c.pass;
    }
    return report("verify", {{"suite", suite}, {"n", n}, {"seed", seed}}, {{"checks", list}},
                  {{"passed", passed}, {"total", checks.size()}, {"all_pass", all_pass}});
}

void flatten(const json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

// ------------------------------------------------------------------- census files

json dm_census_report(int n)
{
    check_n(n, 4, strata::max_dm_census_n);
    const auto c = strata::dm_census(n);
    const BigInt chi = strata::chi_dm(n);
    json certs = {{"chi", int_json(chi)}, {"chi_identity", c.euler_sum == chi}};
    if (n <= strata::max_dm_list_n) {
        const auto listed = strata::census_of(n, strata::dm_strata(n));
        certs["enumeration_match"] = listed.by_type == c.by_type;
    }
    json r = report("strata", {{"space", "dm"}, {"n", n}}, dm_census_json(c), certs);
    validate_census(r);
    return r;
}

json lm_census_report(int n)
{
    check_n(n, 4, strata::max_lm_n);
    const auto c = strata::lm_census(n);
    const BigInt expect = factorial(n - 2);
    long free_total = 0;
    for (const auto& ch : strata::lm_strata(n))
        free_total += ch.coincidence_free();
    json certs = {{"expected_euler", int_json(expect)},
                  {"euler_identity", c.euler_sum == expect},
                  {"coincidence_free_chains", free_total},
                  {"permutohedron_faces", int_json(strata::fubini(n - 2))}};
    json r = report("strata", {{"space", "lm"}, {"n", n}}, lm_census_json(c), certs);
    if (const json notes = lm_notes(n); !notes.empty())
        r["notes"] = notes;
    validate_census(r);
    return r;
}

namespace {

// "M05xM04" -> {5, 4}
std::vector<int> parse_type(const std::string& t)
{
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t.compare(pos, 2, "M0") != 0)
            throw InputError("malformed stratum type '" + t + "'");
        pos += 2;
        std::size_t end = t.find('x', pos);
        if (end == std::string::npos)
            end = t.size();
        try {
            v.push_back(std::stoi(t.substr(pos, end - pos)));
        } catch (const std::exception&) {
            throw InputError("malformed stratum type '" + t + "'");
        }
        if (v.back() < 3)
            throw InputError("malformed stratum type '" + t + "'");
        pos = end + (end < t.size() ? 1 : 0);
    }
    return v;
}

} // namespace

void validate_census(const json& r)
{
    if (!r.is_object() || !r.contains("schema"))
        throw InputError("not a census report");
    if (r["schema"] != schema_version)
        throw InputError("incompatible schema version " + r["schema"].dump() + ", expected \"" +
                         std::string(schema_version) + "\"");
    try {
        const std::string space = r.at("inputs").at("space");
        const int n = r.at("inputs").at("n");
        const json& res = r.at("results");
        const json& cert = r.at("certificates");
        if (res.at("n") != n)
            throw InputError("census n does not match its inputs");
        BigInt total = 0, euler = 0;
        for (const auto& [type, count] : res.at("by_type").items()) {
            const BigInt k = to_bigint(count);
            BigInt chi = 1;
            for (int v : parse_type(type))
                chi *= strata::chi_open(v);
            total += k;
            euler += k * chi;
        }
        if (total != to_bigint(res.at("total")) || euler != to_bigint(res.at("euler_sum")))
            throw VerificationError("census totals or Euler sum do not match the per-type counts");
        if (space == "dm") {
            if (n < 4 || n > strata::max_dm_census_n)
                throw InputError("dm census n out of range");
            const BigInt chi = strata::chi_dm(n);
            if (to_bigint(cert.at("chi")) != chi || euler != chi || cert.at("chi_identity") != true)
                throw VerificationError("Euler characteristic certificate failed");
        } else if (space == "lm") {
            if (n < 4 || n > strata::max_lm_n)
                throw InputError("lm census n out of range");
            const BigInt expect = factorial(n - 2);
            if (to_bigint(cert.at("expected_euler")) != expect || euler != expect || cert.at("euler_identity") != true)
                throw VerificationError("Euler identity certificate failed");
        } else {
            throw InputError("unknown census space '" + space + "'");
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed census report: ") + e.what());
    }
}

void save_census(const std::string& path, const json& r)
{
    validate_census(r);
    std::ofstream f(path);
    if (!f)
        throw InputError("cannot write " + path);
    f << r.dump(2) << "\n";
    if (!f)
        throw InputError("write failed for " + path);
}

json load_census(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot read " + path);
    json r;
    try {
        r = json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    validate_census(r);
    return r;
}

// ------------------------------------------------------------------- entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact combinatorics of hypersimplex chambers, weighted stability and moduli strata", "modcomb"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json", out_path;
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out_path, "write the report to this file");

    int n = 0;
    bool interior_only = false;
    auto* chambers = app.add_subcommand("chambers", "faces of the hypersimplex arrangement");
    chambers->add_option("--n", n)->required();
    chambers->add_flag("--interior-only", interior_only);

    auto* admissible = app.add_subcommand("admissible", "admissible polytopes");
    admissible->add_option("--n", n)->required();

    std::string point;
    int chamber_id = -1;
    auto* omega = app.add_subcommand("omega", "admissible polytopes containing a chamber");
    omega->add_option("--n", n)->required();
    auto* omega_point = omega->add_option("--point", point, "comma-separated rationals");
    auto* omega_chamber = omega->add_option("--chamber", chamber_id, "chamber id");
    omega_point->excludes(omega_chamber);

    std::string weights_text, partition_text;
    auto* stability = app.add_subcommand("stability", "GIT stability of a coincidence partition");
    stability->add_option("--weights", weights_text)->required();
    stability->add_option("--partition", partition_text)->required();

    auto* xi = app.add_subcommand("xi", "fine weight chambers adjacent to a hypersimplex chamber");
    xi->add_option("--n", n)->required();
    xi->add_option("--point", point)->required();

    std::string space;
    bool census_flag = false, list_flag = false;
    auto* strata_cmd = app.add_subcommand("strata", "boundary strata census or listing");
    strata_cmd->add_option("--space", space)->required()->check(CLI::IsMember({"dm", "lm"}));
    strata_cmd->add_option("--n", n)->required();
    auto* census_opt = strata_cmd->add_flag("--census", census_flag);
    strata_cmd->add_flag("--list", list_flag)->excludes(census_opt);

    std::string from, to;
    auto* divisors = app.add_subcommand("divisors", "divisors contracted by a reduction morphism");
    divisors->add_option("--from", from)->required();
    divisors->add_option("--to", to)->required();

    std::string mode, method = "strata", coeffs;
    int order = 8;
    auto* invert = app.add_subcommand("invert", "multiplicative or compositional series inverse");
    invert->add_option("--mode", mode)->required()->check(CLI::IsMember({"mult", "comp"}));
    invert->add_option("--method", method)->check(CLI::IsMember({"direct", "strata"}));
    invert->add_option("--coeffs", coeffs, "a_1,a_2,... (mult) or a_2,a_3,... (comp)");
    invert->add_option("--order", order);

    std::string suite = "all";
    std::uint64_t seed = 20240601;
    auto* verify_cmd = app.add_subcommand("verify", "cross-module verification suite");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--seed", seed);

    std::string path;
    auto* census = app.add_subcommand("census", "save or load a strata census");
    census->require_subcommand(1);
    auto* save = census->add_subcommand("save", "compute and store a census");
    save->add_option("--space", space)->required()->check(CLI::IsMember({"dm", "lm"}));
    save->add_option("--n", n)->required();
    save->add_option("--path", path)->required();
    auto* load = census->add_subcommand("load", "read and re-validate a census");
    load->add_option("--path", path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return OK;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return OK;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return INPUT_ERROR;
    }

    json r;
    int code = OK;
    try {
        if (chambers->parsed())
            r = cmd_chambers(n, interior_only);
        else if (admissible->parsed())
            r = cmd_admissible(n);
        else if (omega->parsed())
            r = cmd_omega(n, point, chamber_id);
        else if (stability->parsed())
            r = cmd_stability(weights_text, partition_text);
        else if (xi->parsed())
            r = cmd_xi(n, point);
        else if (strata_cmd->parsed())
            r = cmd_strata(space, n, list_flag);
        else if (divisors->parsed())
            r = cmd_divisors(from, to);
        else if (invert->parsed())
            r = cmd_invert(mode, method, coeffs, order);
        else if (verify_cmd->parsed()) {
            bool pass = true;
            r = cmd_verify(suite, n, seed, pass);
            code = pass ? OK : VERIFY_FAILED;
        } else if (save->parsed()) {
            r = space == "dm" ? dm_census_report(n) : lm_census_report(n);
            save_census(path, r);
        } else if (load->parsed()) {
            r = load_census(path);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return INPUT_ERROR;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return VERIFY_FAILED;
    }

    std::ostringstream text;
    if (format == "table")
        flatten(r, "", text);
    else
        text << r.dump(2) << "\n";
    if (out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream f(out_path);
        if (!(f << text.str())) {
            err << "input error: cannot write " << out_path << "\n";
            return INPUT_ERROR;
        }
    }
    return code;
}

} // namespace modcomb::cli

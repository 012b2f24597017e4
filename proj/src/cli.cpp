#include "corfun/cli.hpp"

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corfun/bits.hpp"
#include "corfun/closure.hpp"
#include "corfun/dot_export.hpp"
#include "corfun/errors.hpp"
#include "corfun/forest.hpp"
#include "corfun/functor.hpp"
#include "corfun/fundamental_module.hpp"
#include "corfun/json_io.hpp"
#include "corfun/lattice.hpp"
#include "corfun/map_algebra.hpp"
#include "corfun/matrix.hpp"
#include "corfun/poset.hpp"
#include "corfun/total_order.hpp"

namespace corfun::cli {
namespace {

using nlohmann::json;

// ---- argument parsing helpers ----

int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    check_input(!s.empty() && pos == s.size(),
                "cannot parse " + what + " \"" + s + "\"");
    return v;
}

// "--x 3" or "--x 0..5", both bounds included.
std::vector<int> parse_x_range(const std::string& s) {
    int lo = 0, hi = 0;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = parse_int(s, "--x");
    } else {
        lo = parse_int(s.substr(0, dots), "--x start");
        hi = parse_int(s.substr(dots + 2), "--x end");
    }
    check_input(0 <= lo && lo <= hi,
                "--x range must satisfy 0 <= start <= end");
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

std::vector<int> parse_int_list(const std::string& s,
                                const std::string& what) {
    check_input(!s.empty(), what + " must not be empty");
    std::vector<int> out;
    std::istringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(parse_int(piece, what + " entry"));
    check_input(!out.empty(), what + " must not be empty");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_mpz(const std::vector<mpz_class>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out;
}

// ---- input resolution ----

// The ideal lattice of a user-supplied poset can be exponentially large;
// bound both the enumeration and the join/meet tables by the budget
// before constructing anything.
void guard_ideal_budget(const Poset& P) {
    checked_power(2, P.size(), "ideal enumeration");
    auto count = (long long)P.lower_ideals().size();
    if (count > 0 && count > budget_limit() / count)
        throw budget_error("a lattice of " + std::to_string(count) +
                           " ideals exceeds the work budget");
}

MarkedLattice guarded_ideal_lattice(const Poset& P) {
    guard_ideal_budget(P);
    return ideal_lattice(P);
}

struct LatticeChoice {
    std::string name;     // catalog name
    std::string poset;    // poset JSON path
    std::string closure;  // "", "l" or "k"; applies to --poset only
};

MarkedLattice resolve_lattice(const LatticeChoice& c) {
    check_input(c.name.empty() != c.poset.empty(),
                "exactly one of --name and --poset is required");
    if (!c.name.empty()) {
        check_input(c.closure.empty(),
                    "--closure applies only to --poset input");
        return catalog_lattice(c.name);
    }
    Poset P = load_poset(c.poset);
    guard_ideal_budget(P);
    if (c.closure.empty()) return ideal_lattice(P);
    if (c.closure == "l") return L_of(P).M;
    if (c.closure == "k") return K_of(P).M;
    throw validation_error("--closure must be \"l\" or \"k\"");
}

// ---- poset commands ----

void cmd_poset_ideals(const std::string& path) {
    Poset P = load_poset(path);
    checked_power(2, P.size(), "ideal enumeration");
    auto ideals = P.lower_ideals();
    json list = json::array();
    for (auto m : ideals) {
        json one = json::array();
        mask_for_each(m, [&](int i) { one.push_back(P.elements().label(i)); });
        list.push_back(one);
    }
    emit(json{{"count", ideals.size()}, {"ideals", list}});
}

void cmd_poset_auts(const std::string& path) {
    Poset P = load_poset(path);
    auto auts = P.automorphisms();
    json list = json::array();
    for (const auto& s : auts) list.push_back(s.images());
    emit(json{{"count", auts.size()}, {"automorphisms", list}});
}

void cmd_poset_mobius(const std::string& path) {
    Poset P = load_poset(path);
    json rows = json::array();
    for (int a = 0; a < P.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < P.size(); ++b) row.push_back(P.mobius(a, b));
        rows.push_back(row);
    }
    emit(json{{"elements", P.elements().labels()}, {"mobius", rows}});
}

// ---- lattice commands ----

void cmd_lattice_build(const LatticeChoice& c) {
    emit(lattice_to_json(resolve_lattice(c)));
}

void cmd_lattice_info(const LatticeChoice& c) {
    MarkedLattice M = resolve_lattice(c);
    GPartition gp = g_partition(M.T);
    Forest F = graph_of_lattice(M.T);
    int edges = 0;
    for (int p : F.parent) edges += (p >= 0);
    json out;
    if (!c.name.empty()) out["name"] = c.name;
    out["n"] = M.T.size();
    out["irr"] = M.embed.size();
    out["meet_closure"] = gp.meetE.size();
    out["bulbs"] = gp.bulbs.size();
    out["G"] = gp.G.size();
    out["Gamma"] = gp.Gamma.size();
    out["distributive"] = M.T.is_distributive();
    out["forest_edges"] = edges;
    // The term count of u_T is only reported when Gamma is small; the
    // composition over a large Gamma is not desk-scale.
    if ((int)gp.Gamma.size() <= 16)
        out["u_T_terms"] = u_T_sum(M.T).term_count();
    else
        out["u_T_terms"] = nullptr;
    emit(out);
}

void cmd_lattice_closure(const std::string& path) {
    Poset P = load_poset(path);
    guard_ideal_budget(P);
    emit(json{{"ideals", P.lower_ideals().size()},
              {"L", L_of(P).M.T.size()},
              {"K", K_of(P).M.T.size()}});
}

void cmd_lattice_quotients(const LatticeChoice& c) {
    MarkedLattice M = resolve_lattice(c);
    ComparisonMaps cm = comparison_maps(M);
    JoinMorphism pi = pi_T(M);
    bool sandL = true, sandK = true;
    for (int i = 0; i < pi.source.size(); ++i) {
        if (cm.phi(pi(i)) != cm.L.pi(i)) sandL = false;
        if (cm.psi && (*cm.psi)(pi(i)) != cm.K.pi(i)) sandK = false;
    }
    json out;
    out["T"] = M.T.size();
    out["irr"] = M.embed.size();
    out["L"] = cm.L.M.T.size();
    out["K"] = cm.K.M.T.size();
    out["phi"] = cm.phi.images;
    out["phi_surjective"] = cm.phi.surjective();
    out["sandwich_L"] = sandL;
    if (cm.psi) {
        out["psi"] = cm.psi->images;
        out["psi_surjective"] = cm.psi->surjective();
        out["sandwich_K"] = sandK;
    } else {
        out["psi"] = nullptr;
        out["psi_reason"] = cm.psi_reason;
    }
    emit(out);
}

void cmd_lattice_dot(const LatticeChoice& c) {
    std::cout << lattice_dot(resolve_lattice(c));
}

// ---- endo ----

void cmd_endo_total(int n) {
    StructureReport rep = structure_check(n);
    emit(json{{"n", rep.n},
              {"endo_count", rep.endo_count},
              {"ok", rep.ok},
              {"failures", rep.failures}});
    require(rep.ok, "join-endomap structure report failed");
}

// ---- forest commands ----

Forest forest_from_args(const std::string& name, const std::string& parents,
                        MarkedLattice* M_out) {
    check_input(name.empty() != parents.empty(),
                "exactly one of --name and --parent is required");
    if (!name.empty()) {
        MarkedLattice M = catalog_lattice(name);
        Forest F = graph_of_lattice(M.T);
        if (M_out) *M_out = std::move(M);
        return F;
    }
    auto p = parse_int_list(parents, "--parent");
    return Forest((int)p.size(), p);
}

void cmd_forest_build(const std::string& name, const std::string& parents,
                      bool dot) {
    MarkedLattice M;
    Forest F = forest_from_args(name, parents, &M);
    std::vector<int> gamma =
        name.empty() ? std::vector<int>{} : M.T.gamma_set();
    if (dot) {
        std::vector<std::string> labels =
            name.empty() ? std::vector<std::string>{} : M.T.names();
        std::cout << forest_dot(F, labels, gamma);
        return;
    }
    json out;
    out["n"] = F.n;
    out["parent"] = F.parent;
    out["roots"] = F.roots();
    out["leaves"] = F.leaves();
    if (!name.empty()) {
        out["lattice"] = name;
        out["gamma"] = gamma;
    }
    emit(out);
}

void cmd_forest_idempotents(const std::string& name,
                            const std::string& parents,
                            const std::string& bspec) {
    if (!name.empty()) {
        check_input(parents.empty() && bspec.empty(),
                    "--name does not combine with --parent or --b");
        MarkedLattice M = catalog_lattice(name);
        auto gamma = M.T.gamma_set();
        std::cout << "gamma:";
        for (int a : gamma) std::cout << " " << a;
        std::cout << "\n";
        for (int a : gamma) {
            std::cout << "u_a (a = " << a << "):\n";
            std::cout << u_a_sum(M.T, a).dump();
        }
        FormalMapSum uT = u_T_sum(M.T);
        std::cout << "u_T:\n" << uT.dump();
        std::cout << "terms: " << uT.term_count() << "\n";
        bool idem = is_idempotent(uT);
        std::cout << "idempotent: " << (idem ? "true" : "false") << "\n";
        require(idem, "u_T failed idempotency");
        return;
    }
    Forest F = forest_from_args(name, parents, nullptr);
    std::vector<int> B =
        bspec.empty() ? F.leaves() : parse_int_list(bspec, "--b");
    GeodesicIdempotents gi = geodesic_idempotents(F, B);
    std::cout << "B:";
    for (int x : gi.B) std::cout << " " << x;
    std::cout << "\n";
    for (std::size_t i = 0; i < gi.B.size(); ++i) {
        std::cout << "h (x = " << gi.B[i] << "):\n" << gi.h_x[i].dump();
        std::cout << "v (x = " << gi.B[i] << "):\n" << gi.v_x[i].dump();
        std::cout << "u (x = " << gi.B[i] << "):\n" << gi.u_x[i].dump();
    }
    std::cout << "v_B:\n" << gi.v_B.dump();
    std::cout << "u_B:\n" << gi.u_B.dump();
    std::cout << "idempotent: "
              << (is_idempotent(gi.v_B) && is_idempotent(gi.u_B) ? "true"
                                                                 : "false")
              << "\n";
}

// ---- functor commands ----

void cmd_functor_rank(const std::string& path, const std::string& xspec,
                      bool brute) {
    Poset P = load_poset(path);
    guard_ideal_budget(P);
    auto xs = parse_x_range(xspec);
    if (!brute) {
        std::cout << "x,formula\n";
        for (int x : xs)
            std::cout << x << "," << rank_formula(P, x).get_str() << "\n";
        return;
    }
    MarkedLattice M = ideal_lattice(P);
    std::cout << "x,formula,bruteforce,basis_count\n";
    for (int x : xs) {
        MatrixN MN = matrix_N(M, x);
        int rk = rank(MN.N);
        auto basis = basis_BX(M, x);
        std::cout << x << "," << rank_formula(P, x).get_str() << "," << rk
                  << "," << basis.size() << "\n";
    }
}

void cmd_functor_smith(const std::string& path, int x, bool use_k) {
    Poset P = load_poset(path);
    guard_ideal_budget(P);
    check_input(x >= 0, "--x must be non-negative");
    MarkedLattice M = use_k ? K_of(P).M : ideal_lattice(P);
    MatrixN MN = matrix_N(M, x);
    std::cout << join_mpz(smith_divisors(MN.N)) << "\n";
}

void cmd_functor_basis(const LatticeChoice& c, int x) {
    MarkedLattice M = resolve_lattice(c);
    check_input(x >= 0, "--x must be non-negative");
    auto basis = basis_BX(M, x);
    json arr = json::array();
    for (const auto& phi : basis) arr.push_back(phi);
    emit(json{{"x", x}, {"count", basis.size()}, {"basis", arr}});
}

void cmd_functor_action(const LatticeChoice& c, const std::string& corr) {
    MarkedLattice M = resolve_lattice(c);
    Relation U = load_relation(corr);
    FunctorAction act = fundamental_action(M, U);
    std::cout << act.mat.to_string();
}

void cmd_functor_gamma_span(const std::string& path,
                            const std::string& xspec) {
    Poset P = load_poset(path);
    guard_ideal_budget(P);
    auto xs = parse_x_range(xspec);
    Poset Pop = P.opposite();
    std::cout << "x,rank,formula\n";
    for (int x : xs) {
        int rk = span_rank_gamma(P, x);
        std::cout << x << "," << rk << ","
                  << rank_formula(Pop, x).get_str() << "\n";
    }
}

// ---- module ----

void cmd_module_check(const std::string& path) {
    Poset P = load_poset(path);
    bool ok = theta_transport_check(P);
    emit(json{{"elements", P.size()},
              {"mode", P.size() <= 3 ? "exhaustive" : "sampled"},
              {"ok", ok}});
    require(ok, "transport check failed");
}

// ---- verify ----

// The posets parametrizing the non-chain summands of the known
// decompositions.
std::map<std::string, Poset> summand_posets() {
    std::map<std::string, Poset> P;
    P.emplace("antichain2", Poset(2));
    P.emplace("antichain3", Poset(3));
    P.emplace("v", Poset(3, {{0, 1}, {0, 2}}));
    P.emplace("lambda", Poset(3, {{1, 0}, {2, 0}}));
    P.emplace("chain2_pt", Poset(3, {{0, 1}}));
    P.emplace("n4", Poset(4, {{0, 2}, {1, 2}, {1, 3}}));
    return P;
}

void cmd_verify_examples(int xmax) {
    check_input(0 <= xmax && xmax <= 30, "--x-max must lie in 0..30");
    auto fixtures = summand_posets();
    // Known direct-sum decompositions: multiplicity of each non-chain
    // summand, keyed by its parametrizing poset.  The chain summands
    // always occur with multiplicity |V_n(T)|.
    struct Row {
        const char* lattice;
        std::vector<std::pair<const char*, int>> extras;
    };
    const std::vector<Row> rows = {
        {"lozenge", {{"antichain2", 1}}},
        {"m3", {{"antichain2", 3}, {"antichain3", 1}}},
        {"n5", {{"antichain2", 2}, {"chain2_pt", 1}}},
        {"c", {{"antichain2", 1}, {"v", 1}}},
        {"cop", {{"antichain2", 1}, {"lambda", 1}}},
        {"p32",
         {{"antichain2", 3},
          {"v", 1},
          {"lambda", 1},
          {"chain2_pt", 2},
          {"n4", 1}}},
        {"chain1", {}},
        {"chain2", {}},
        {"chain3", {}},
    };
    int checks = 0;
    for (const auto& row : rows) {
        MarkedLattice M = catalog_lattice(row.lattice);
        const Lattice& T = M.T;
        std::vector<long> vs;
        for (int n = 0; n < T.size(); ++n)
            vs.push_back((long)chains_count(T, n));
        for (int x = 0; x <= xmax; ++x) {
            mpz_class total = 0;
            for (int n = 0; n < (int)vs.size(); ++n)
                total += mpz_class(vs[n]) * hit_count(x, n, n + 1);
            for (const auto& [key, m] : row.extras)
                total += mpz_class(m) * rank_formula(fixtures.at(key), x);
            mpz_class want;
            mpz_ui_pow_ui(want.get_mpz_t(), (unsigned long)T.size(),
                          (unsigned long)x);
            require(total == want,
                    std::string("decomposition identity failed for ") +
                        row.lattice + " at x = " + std::to_string(x));
            ++checks;
        }
        std::ostringstream line;
        line << "ok " << row.lattice << ": |T|^x matches for x <= " << xmax
             << " (chain multiplicities";
        for (long v : vs) line << " " << v;
        line << "; extras";
        if (row.extras.empty()) line << " none";
        for (const auto& [key, m] : row.extras)
            line << " " << key << ":" << m;
        line << ")";
        std::cout << line.str() << "\n";
    }
    std::cout << "verify: " << checks << " identities hold\n";
}

void cmd_verify_invariants() {
    const std::vector<std::string> names = {
        "lozenge", "m3",    "n5",          "c",      "cop",     "p32",
        "grid33",  "id_n4", "uniontrees6", "chain3", "boolean3"};
    for (const auto& name : names) {
        MarkedLattice M = catalog_lattice(name);
        GPartition gp = g_partition(M.T);
        graph_of_lattice(M.T);  // validates leaves == Gamma internally
        FormalMapSum uT = u_T_sum(M.T);
        require(is_idempotent(uT), name + ": u_T is not idempotent");
        Bits g(M.T.size());
        for (int t : gp.G) g.set(t);
        for (const auto& [f, cf] : uT.terms()) {
            (void)cf;
            for (int v : f)
                require(g.test(v), name + ": a u_T term leaves G");
        }
        ComparisonMaps cm = comparison_maps(M);
        require(cm.psi.has_value(), name + ": psi comparison map missing");
        JoinMorphism pi = pi_T(M);
        for (int i = 0; i < pi.source.size(); ++i) {
            require(cm.phi(pi(i)) == cm.L.pi(i),
                    name + ": phi does not factor the L projection");
            require((*cm.psi)(pi(i)) == cm.K.pi(i),
                    name + ": psi does not factor the K projection");
        }
        long long gI = (long long)ideal_lattice(M.irr).T.g_set().size();
        long long gK = (long long)K_of(M.irr).M.T.g_set().size();
        require(gI == gK,
                name + ": |G| differs between the ideal lattice and K");
        std::cout << "ok " << name
                  << ": partition, forest, u_T, quotients, |G|\n";
    }
    for (int n = 0; n <= 3; ++n)
        require(structure_check(n).ok,
                "join-endomap structure failed at n = " + std::to_string(n));
    std::cout << "ok endo: structure report for n <= 3\n";
    require(all_forests(3).size() == 16 && all_forests(4).size() == 125,
            "forest census mismatch");
    std::cout << "ok forests: census on 3 and 4 vertices\n";
    require(theta_transport_check(Poset(2)),
            "transport failed on the 2-antichain");
    require(theta_transport_check(Poset(2, {{0, 1}})),
            "transport failed on the 2-chain");
    std::cout << "ok module: transport on the 2-element posets\n";
    std::cout << "verify: all invariants hold\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"correspondence functors on finite lattices"};
    app.name("corfun");
    app.require_subcommand(1);

    // poset
    auto* poset = app.add_subcommand("poset", "poset inspection");
    poset->require_subcommand(1);
    std::string pi_path;
    auto* p_ideals = poset->add_subcommand("ideals", "list the lower ideals");
    p_ideals->add_option("--poset", pi_path, "poset JSON file")->required();
    p_ideals->callback([&] { cmd_poset_ideals(pi_path); });
    std::string pa_path;
    auto* p_auts = poset->add_subcommand("auts", "list the automorphisms");
    p_auts->add_option("--poset", pa_path, "poset JSON file")->required();
    p_auts->callback([&] { cmd_poset_auts(pa_path); });
    std::string pm_path;
    auto* p_mob = poset->add_subcommand("mobius", "print the Moebius matrix");
    p_mob->add_option("--poset", pm_path, "poset JSON file")->required();
    p_mob->callback([&] { cmd_poset_mobius(pm_path); });

    // lattice
    auto* lattice = app.add_subcommand("lattice", "lattice construction");
    lattice->require_subcommand(1);
    LatticeChoice lb, li, lq, ld;
    auto add_choice = [](CLI::App* cmd, LatticeChoice& c, bool closure) {
        cmd->add_option("--name", c.name, "catalog lattice name");
        cmd->add_option("--poset", c.poset,
                        "poset JSON file (uses its ideal lattice)");
        if (closure)
            cmd->add_option("--closure", c.closure,
                            "quotient of the ideal lattice: l or k")
                ->check(CLI::IsMember({"l", "k"}));
    };
    auto* l_build =
        lattice->add_subcommand("build", "emit the lattice as JSON");
    add_choice(l_build, lb, true);
    l_build->callback([&] { cmd_lattice_build(lb); });
    auto* l_info =
        lattice->add_subcommand("info", "summary counts of the lattice");
    add_choice(l_info, li, true);
    l_info->callback([&] { cmd_lattice_info(li); });
    std::string lc_path;
    auto* l_closure = lattice->add_subcommand(
        "closure", "sizes of the ideal lattice and its L/K quotients");
    l_closure->add_option("--poset", lc_path, "poset JSON file")->required();
    l_closure->callback([&] { cmd_lattice_closure(lc_path); });
    auto* l_quot = lattice->add_subcommand(
        "quotients", "comparison maps onto the L/K quotients");
    add_choice(l_quot, lq, false);
    l_quot->callback([&] { cmd_lattice_quotients(lq); });
    auto* l_dot =
        lattice->add_subcommand("dot", "Hasse diagram in DOT format");
    add_choice(l_dot, ld, true);
    l_dot->callback([&] { cmd_lattice_dot(ld); });

    // endo
    auto* endo = app.add_subcommand("endo", "join-endomap algebra");
    endo->require_subcommand(1);
    int en = 0;
    auto* e_total = endo->add_subcommand(
        "total", "structure report for the endomaps of a total order");
    e_total->add_option("--n", en, "top element of the order (n <= 4)")
        ->required();
    e_total->callback([&] { cmd_endo_total(en); });

    // forest
    auto* forest = app.add_subcommand("forest", "forests and idempotents");
    forest->require_subcommand(1);
    std::string fb_name, fb_parent, fi_name, fi_parent, fi_b;
    bool fb_dot = false;
    auto* f_build = forest->add_subcommand(
        "build", "the forest of a lattice, or one given by parents");
    f_build->add_option("--name", fb_name, "catalog lattice name");
    f_build->add_option("--parent", fb_parent,
                        "comma-separated parents, -1 for a root");
    f_build->add_flag("--dot", fb_dot, "emit DOT instead of JSON");
    f_build->callback([&] { cmd_forest_build(fb_name, fb_parent, fb_dot); });
    auto* f_idem = forest->add_subcommand(
        "idempotents", "u_T of a lattice, or v_B/u_B of a forest");
    f_idem->add_option("--name", fi_name, "catalog lattice name");
    f_idem->add_option("--parent", fi_parent,
                       "comma-separated parents, -1 for a root");
    f_idem->add_option("--b", fi_b,
                       "comma-separated leaf vertices (default: all)");
    f_idem->callback(
        [&] { cmd_forest_idempotents(fi_name, fi_parent, fi_b); });

    // functor
    auto* functor = app.add_subcommand("functor", "functor evaluation");
    functor->require_subcommand(1);
    std::string fr_path, fr_x;
    bool fr_brute = false;
    auto* fu_rank = functor->add_subcommand(
        "rank", "rank of the evaluation as CSV over a range of x");
    fu_rank->add_option("--poset", fr_path, "poset JSON file")->required();
    fu_rank->add_option("--x", fr_x, "evaluation size: N or N..M")
        ->required();
    fu_rank->add_flag("--bruteforce", fr_brute,
                      "also rank the linked-pair matrix and count the basis");
    fu_rank->callback([&] { cmd_functor_rank(fr_path, fr_x, fr_brute); });
    std::string fs_path;
    int fs_x = 0;
    bool fs_k = false;
    auto* fu_smith = functor->add_subcommand(
        "smith", "elementary divisors of the linked-pair matrix");
    fu_smith->add_option("--poset", fs_path, "poset JSON file")->required();
    fu_smith->add_option("--x", fs_x, "evaluation size")->required();
    fu_smith->add_flag("--k", fs_k, "use the K quotient instead of ideals");
    fu_smith->callback([&] { cmd_functor_smith(fs_path, fs_x, fs_k); });
    LatticeChoice fb_choice, fa_choice;
    int fb_x = 0;
    auto* fu_basis =
        functor->add_subcommand("basis", "the basis maps at an x-set");
    add_choice(fu_basis, fb_choice, true);
    fu_basis->add_option("--x", fb_x, "evaluation size")->required();
    fu_basis->callback([&] { cmd_functor_basis(fb_choice, fb_x); });
    std::string fa_corr;
    auto* fu_action = functor->add_subcommand(
        "action", "matrix of a correspondence on the basis");
    fu_action->add_option("--lattice", fa_choice.name,
                          "catalog lattice name");
    fu_action->add_option("--poset", fa_choice.poset,
                          "poset JSON file (uses its ideal lattice)");
    fu_action->add_option("--corr", fa_corr, "correspondence JSON file")
        ->required();
    fu_action->callback([&] { cmd_functor_action(fa_choice, fa_corr); });
    std::string fg_path, fg_x;
    auto* fu_span = functor->add_subcommand(
        "gamma-span", "rank of the span of the gamma translates as CSV");
    fu_span->add_option("--poset", fg_path, "poset JSON file")->required();
    fu_span->add_option("--x", fg_x, "evaluation size: N or N..M")
        ->required();
    fu_span->callback([&] { cmd_functor_gamma_span(fg_path, fg_x); });

    // module
    auto* module = app.add_subcommand("module", "fundamental module");
    module->require_subcommand(1);
    std::string mc_path;
    auto* m_check = module->add_subcommand(
        "check", "transport the explicit action onto the symbols");
    m_check->add_option("--poset", mc_path, "poset JSON file")->required();
    m_check->callback([&] { cmd_module_check(mc_path); });

    // verify
    auto* verify = app.add_subcommand("verify", "regression suites");
    verify->require_subcommand(1);
    int xmax = 5;
    auto* v_ex = verify->add_subcommand(
        "examples19", "decomposition identities of the catalog lattices");
    v_ex->add_option("--x-max", xmax, "largest evaluation size (default 5)");
    v_ex->callback([&] { cmd_verify_examples(xmax); });
    auto* v_inv = verify->add_subcommand(
        "invariants", "structural invariants of the catalog");
    v_inv->callback([&] { cmd_verify_invariants(); });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        CLI::App* a = &app;
        while (!a->get_subcommands().empty())
            a = a->get_subcommands().front();
        std::cout << a->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "corfun: usage error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "corfun: validation error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "corfun: budget error: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        std::cerr << "corfun: invariant error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "corfun: invariant error: unexpected: " << e.what()
                  << "\n";
        return 4;
    }
    return 0;
}

}  // namespace corfun::cli

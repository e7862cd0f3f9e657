// Acceptance suite: exercises the full contract end to end and prints one
// PASS/FAIL line per criterion. Exact integer comparisons throughout; any
// mismatch is a failure. Usage:
//
//   mhc_acceptance <path-to-mhc-binary> <fixtures-dir> <golden-dir>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mhc/ghc.hpp"
#include "mhc/parser.hpp"
#include "mhc/render.hpp"
#include "mhc/table_io.hpp"
#include "test_support.hpp"

using namespace mhc;
using mhc::test::Rng;

namespace {

std::string g_mhc;
std::string g_fixtures;
std::string g_golden;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("failed to spawn: " + command);
    CommandResult result;
    char buffer[4096];
    size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string quoted(const std::string& s) {
    return "'" + s + "'";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::int64_t cell_dimension(const VarietyTable& t, int i, int p) {
    const HodgeClass* cls = t.cell(i, p);
    if (cls == nullptr)
        return 0;
    std::int64_t total = 0;
    for (const auto& [atom, mult] : cls->terms())
        total += mult * atom.dimension();
    return total;
}

// dim N^p H^i as a suffix sum of graded cell dimensions over steps >= p.
std::int64_t nested_dimension(const VarietyTable& t, int i, int p) {
    std::int64_t total = 0;
    for (const auto& [key, cls] : t.cells())
        if (key.first == i && key.second >= p)
            total += cell_dimension(t, key.first, key.second);
    return total;
}

struct Pool {
    std::vector<VarietyTable> tables;
    Registry registry;

    const VarietyTable& operator[](size_t i) const { return tables[i]; }
};

Pool build_pool() {
    Pool pool;
    std::vector<VarietyTable> loaded;
    for (const char* name : {"s2.tbl", "xbad.tbl", "v4.tbl", "v5.tbl"}) {
        std::vector<std::string> warnings;
        VarietyTable table = load_table_file(g_fixtures + "/" + name, &warnings);
        pool.registry.register_table(table);
        loaded.push_back(std::move(table));
    }
    pool.tables = test::acceptance_pool(loaded);
    for (int g = 1; g <= 3; ++g)
        pool.registry.curve(g);
    return pool;
}

// The class of a pool table in the fragment: built-ins expand to Lefschetz
// polynomials, everything else is its generator symbol.
MotivicClass pool_class(const VarietyTable& table, Registry& registry) {
    const std::string& name = table.name();
    if (name == "point")
        return MotivicClass::one();
    if (name.size() >= 2 && name[0] == 'P')
        return projective_class(table.dimension());
    if (auto genus = Registry::curve_genus(name)) {
        if (*genus == 0)
            return projective_class(1);
        return MotivicClass::symbol(registry.curve(*genus).name);
    }
    return MotivicClass::symbol(name);
}

using Triple = std::tuple<size_t, size_t, int>;  // (ambient, center, codim)

std::vector<Triple> valid_triples(const Pool& pool) {
    std::vector<Triple> out;
    for (size_t xi = 0; xi < pool.tables.size(); ++xi)
        for (size_t zi = 0; zi < pool.tables.size(); ++zi)
            for (int c = 2; c <= 4; ++c)
                if (pool[zi].dimension() + c == pool[xi].dimension())
                    out.emplace_back(xi, zi, c);
    return out;
}

// --- criteria -------------------------------------------------------------

void criterion_blowup_relation(Checker& check, const Pool& pool,
                               const std::vector<Triple>& suite) {
    check.require(suite.size() >= 100, "suite has fewer than 100 triples");
    for (const auto& [xi, zi, c] : suite) {
        const VarietyTable& x = pool[xi];
        const VarietyTable& z = pool[zi];
        VarietyTable bl = blowup_table(x, z, c);
        VarietyTable e = exceptional_table(z, c, x.dimension());
        bool nu_ok = coniveau_class(bl) - coniveau_class(e) ==
                     coniveau_class(x) - coniveau_class(z);
        bool level_ok = level_class(bl).cls - level_class(e).cls ==
                        level_class(x).cls - level_class(z).cls;
        check.require(nu_ok, "coniveau relation fails for Bl_" + z.name() + " " + x.name());
        check.require(level_ok, "level relation fails for Bl_" + z.name() + " " + x.name());
    }
}

void criterion_exceptional_dimensions(Checker& check, const Pool& pool,
                                      const std::vector<Triple>& suite) {
    for (const auto& [xi, zi, c] : suite) {
        const VarietyTable& x = pool[xi];
        const VarietyTable& z = pool[zi];
        VarietyTable e = exceptional_table(z, c, x.dimension());
        for (int i = 0; i <= 2 * e.dimension(); ++i)
            for (int p = 0; p <= e.dimension(); ++p) {
                std::int64_t expected = 0;
                for (int k = 0; k <= c - 1; ++k)
                    expected += nested_dimension(z, i - 2 * k, p - k);
                check.require(nested_dimension(e, i, p) == expected,
                              "strand decomposition fails for E over " + z.name());
            }
    }
}

void criterion_graded_bookkeeping(Checker& check, const Pool& pool,
                                  const std::vector<Triple>& suite) {
    for (const auto& [xi, zi, c] : suite) {
        const VarietyTable& x = pool[xi];
        const VarietyTable& z = pool[zi];
        VarietyTable bl = blowup_table(x, z, c);
        VarietyTable e = exceptional_table(z, c, x.dimension());
        for (int i = 0; i <= 2 * bl.dimension(); ++i)
            for (int p = 0; p <= bl.dimension(); ++p)
                check.require(cell_dimension(bl, i, p) + cell_dimension(z, i, p) ==
                                  cell_dimension(x, i, p) + cell_dimension(e, i, p),
                              "graded bookkeeping fails for Bl_" + z.name() + " " + x.name());

        FPPolynomial strands;
        for (int k = 1; k <= c - 1; ++k)
            strands.add(2 * k, 0, 1);
        FPPolynomial lhs = poincare(forget_filtration(coniveau_class(bl)));
        FPPolynomial rhs = poincare(forget_filtration(coniveau_class(x))) +
                           poincare(forget_filtration(coniveau_class(z))) * strands;
        check.require(lhs == rhs,
                      "Poincare identity fails for Bl_" + z.name() + " " + x.name());
    }
}

void criterion_operational_check(Checker& check, Registry& registry) {
    std::string base = quoted(g_mhc) + " --load " + quoted(g_fixtures + "/xbad.tbl") +
                       " --format machine ghc 'X_bad'";
    CommandResult bad = run_command(base + " 2>/dev/null");
    check.require(bad.exit_code == 0, "ghc X_bad exited with " + std::to_string(bad.exit_code));
    check.require(bad.output == "ghc criterion-fails\nfail 3 1 0 2\n",
                  "unexpected ghc output: " + bad.output);
    CommandResult strict = run_command(quoted(g_mhc) + " --strict --load " +
                                       quoted(g_fixtures + "/xbad.tbl") +
                                       " --format machine ghc 'X_bad' 2>/dev/null");
    check.require(strict.exit_code == 3, "strict mode should exit 3 on criterion-fails");

    const char* mixed_tate[] = {"point",
                                "P1",
                                "P2",
                                "P3",
                                "P4",
                                "curve(0)",
                                "blowup(P2, point, 2)",
                                "blowup(P3, P1, 2)",
                                "blowup(P3, point, 3)",
                                "blowup(P4, P2, 2)",
                                "prod(P1, P2)",
                                "prod(blowup(P2, point, 2), P1)",
                                "L^3 + 2*L - 5"};
    std::vector<std::string> holding(std::begin(mixed_tate), std::end(mixed_tate));
    for (int g = 0; g <= 3; ++g)
        holding.push_back("blowup(P3, curve(" + std::to_string(g) + "), 2)");
    for (const std::string& text : holding) {
        CommandResult verdict = run_command(quoted(g_mhc) + " --format machine ghc " +
                                            quoted(text) + " 2>/dev/null");
        check.require(verdict.exit_code == 0 && verdict.output == "ghc criterion-holds\n",
                      "criterion should hold for " + text + ", got: " + verdict.output);
        MotivicClass cls = evaluate(parse_expression(text), registry);
        check.require(kernel_check(cls, registry), "kernel membership should hold for " + text);
    }
    // Kernel agreement on the failing table as well.
    MotivicClass bad_cls = MotivicClass::symbol("X_bad");
    check.require(!kernel_check(bad_cls, registry), "X_bad should lie outside the kernel");
}

void criterion_lefschetz_multiplication(Checker& check, const Pool& pool, Registry& registry) {
    FPPolynomial shift = FPPolynomial::monomial(1, 2, 1);
    for (const VarietyTable& table : pool.tables) {
        MotivicClass cls = pool_class(table, registry);
        MotivicClass twisted = MotivicClass::lefschetz(1) * cls;

        Realized nu = realize_coniveau(twisted, registry);
        FilteredHodgeClass base_nu = coniveau_class(table);
        check.require(graded_dimensions(nu.cls) == shift * graded_dimensions(base_nu),
                      "coniveau graded data fails to shift for " + table.name());
        check.require(filtered_poincare(nu.cls) == filtered_poincare(tate_twist(base_nu, 1)),
                      "coniveau polynomial fails to shift for " + table.name());

        Realized level = realize_level(twisted, registry);
        FilteredHodgeClass base_level = level_class(table).cls;
        check.require(graded_dimensions(level.cls) == shift * graded_dimensions(base_level),
                      "level graded data fails to shift for " + table.name());
        check.require(filtered_poincare(level.cls) ==
                          filtered_poincare(tate_twist(base_level, 1)),
                      "level polynomial fails to shift for " + table.name());
    }
}

void criterion_completion(Checker& check, Registry& registry) {
    Rng rng(20250810);
    const std::vector<std::string> symbols = {"C_1", "C_2", "C_3", "S2", "X_bad"};
    auto random_class = [&](int max_terms) {
        MotivicClass out;
        int terms = test::pick(rng, 0, max_terms);
        for (int t = 0; t < terms; ++t) {
            MotivicTerm term;
            int count = test::pick(rng, 0, 2);
            for (int s = 0; s < count; ++s)
                term.symbols.push_back(symbols[test::pick(rng, 0, 4)]);
            std::sort(term.symbols.begin(), term.symbols.end());
            term.lefschetz_power = test::pick(rng, -3, 3);
            out.add(term, test::pick(rng, -3, 3));
        }
        return out;
    };

    for (int trial = 0; trial < 60; ++trial) {
        int m = test::pick(rng, 0, 8);
        MotivicClass a = random_class(4);
        MotivicClass b = a;
        int junk_terms = test::pick(rng, 1, 3);
        for (int j = 0; j < junk_terms; ++j) {
            MotivicTerm term;
            int count = test::pick(rng, 0, 2);
            long long dims = 0;
            for (int s = 0; s < count; ++s) {
                term.symbols.push_back(symbols[test::pick(rng, 0, 4)]);
                dims += registry.require(term.symbols.back()).dimension;
            }
            std::sort(term.symbols.begin(), term.symbols.end());
            term.lefschetz_power = -m - dims - test::pick(rng, 0, 3);
            b.add(term, test::pick(rng, 0, 1) == 0 ? 1 : -2);
        }
        check.require(equal_mod_dimension(a, b, m, registry),
                      "constructed pair is not equal modulo the filtration");
        FPPolynomial fa = filtered_poincare(realize_coniveau(a, registry).cls);
        FPPolynomial fb = filtered_poincare(realize_coniveau(b, registry).cls);
        check.require(fa.agree_above_t(fb, -m),
                      "coniveau polynomials disagree above degree " + std::to_string(-m));
        FPPolynomial la = filtered_poincare(realize_level(a, registry).cls);
        FPPolynomial lb = filtered_poincare(realize_level(b, registry).cls);
        check.require(la.agree_above_t(lb, -m),
                      "level polynomials disagree above degree " + std::to_string(-m));
    }

    MotivicClass boundary = MotivicClass::one() + MotivicClass::lefschetz(-5);
    check.require(dimension_truncate(boundary, 5, registry) == MotivicClass::one(),
                  "truncation at 5 should drop L^-5");
    check.require(dimension_truncate(boundary, 6, registry) != MotivicClass::one(),
                  "truncation at 6 should keep L^-5");
}

void criterion_transfer(Checker& check) {
    std::string base = quoted(g_mhc) + " --format machine transfer --precision 10 ";
    CommandResult equal =
        run_command(base + "'blowup(P2,point,2)' 'prod(P1,P1)' 2>/dev/null");
    check.require(equal.exit_code == 0, "transfer exited with " +
                                            std::to_string(equal.exit_code));
    check.require(equal.output ==
                      "transfer valid\nclass equal\nleft ghc criterion-holds\nright ghc "
                      "criterion-holds\n",
                  "unexpected transfer output: " + equal.output);

    CommandResult norm = run_command(quoted(g_mhc) +
                                     " normalize 'blowup(P2,point,2)' 2>/dev/null");
    check.require(norm.output == "1 + 2*L + L^2\n",
                  "unexpected normal form: " + norm.output);

    CommandResult unequal = run_command(base + "'P2' 'prod(P1,P1)' 2>/dev/null");
    check.require(unequal.exit_code == 0, "transfer (unequal) exited with " +
                                              std::to_string(unequal.exit_code));
    check.require(unequal.output ==
                      "transfer none\nclass unequal\nleft ghc criterion-holds\nright ghc "
                      "criterion-holds\n",
                  "unexpected transfer output: " + unequal.output);
}

void criterion_algebraic_properties(Checker& check, Registry& registry) {
    Rng rng(424242);

    // Ring axioms in the fragment.
    auto random_mc = [&] {
        MotivicClass out;
        int terms = test::pick(rng, 0, 3);
        for (int t = 0; t < terms; ++t) {
            MotivicTerm term;
            int count = test::pick(rng, 0, 2);
            for (int s = 0; s < count; ++s)
                term.symbols.push_back(registry.curve(test::pick(rng, 1, 3)).name);
            std::sort(term.symbols.begin(), term.symbols.end());
            term.lefschetz_power = test::pick(rng, -4, 4);
            out.add(term, test::pick(rng, -3, 3));
        }
        return out;
    };
    for (int trial = 0; trial < 200; ++trial) {
        MotivicClass a = random_mc();
        MotivicClass b = random_mc();
        MotivicClass c = random_mc();
        bool ok = a * b == b * a && (a * b) * c == a * (b * c) && a + b == b + a &&
                  (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c &&
                  a * MotivicClass::one() == a && (a - a).is_zero() &&
                  a * MotivicClass::lefschetz(1) * MotivicClass::lefschetz(-1) == a;
        check.require(ok, "fragment ring axiom fails");
    }

    // Ring axioms for filtered classes.
    for (int trial = 0; trial < 200; ++trial) {
        FilteredHodgeClass a = test::random_filtered_class(rng, false);
        FilteredHodgeClass b = test::random_filtered_class(rng, false);
        FilteredHodgeClass c = test::random_filtered_class(rng, false);
        bool ok = tensor(a, b) == tensor(b, a) &&
                  tensor(tensor(a, b), c) == tensor(a, tensor(b, c)) &&
                  tensor(a, b + c) == tensor(a, b) + tensor(a, c) &&
                  tensor(a, FilteredHodgeClass::unit()) == a && (a - a).zero() &&
                  a + b == b + a;
        check.require(ok, "filtered ring axiom fails");
    }

    // Level placement is additive and split by the forgetful map.
    for (int trial = 0; trial < 200; ++trial) {
        HodgeClass a = test::random_hodge_class(rng);
        HodgeClass b = test::random_hodge_class(rng);
        check.require(level_filtration(a + b).cls ==
                          level_filtration(a).cls + level_filtration(b).cls,
                      "level placement is not additive");
        check.require(forget_filtration(level_filtration(a).cls) == a,
                      "forgetting the level placement loses data");
    }

    // Atom tensor: Hodge symmetry and dimension multiplicativity.
    for (int trial = 0; trial < 200; ++trial) {
        HodgeAtom a = test::random_atom(rng);
        HodgeAtom b = test::random_atom(rng);
        HodgeAtom ab = atom_tensor(a, b);
        bool symmetric = true;
        auto numbers = ab.hodge_numbers();
        for (const auto& [key, mult] : numbers) {
            auto mirror = numbers.find({key.second, key.first});
            if (mirror == numbers.end() || mirror->second != mult)
                symmetric = false;
        }
        check.require(symmetric, "tensor breaks Hodge symmetry");
        check.require(ab.dimension() == a.dimension() * b.dimension(),
                      "tensor breaks dimension multiplicativity");
    }
}

void criterion_cli_contract(Checker& check) {
    struct Golden {
        const char* file;
        std::string command;
    };
    const Golden goldens[] = {
        {"fp_coniveau_blowup.txt", quoted(g_mhc) + " --format machine fp --filtration coniveau "
                                       "'blowup(P2, point, 2)'"},
        {"normalize_difference.txt",
         quoted(g_mhc) + " --format machine normalize 'blowup(P2, point, 2) - prod(P1,P1)'"},
        {"ghc_p3.txt", quoted(g_mhc) + " --format machine ghc 'P3'"},
    };
    for (const auto& golden : goldens) {
        CommandResult result = run_command(golden.command + " 2>/dev/null");
        check.require(result.exit_code == 0,
                      std::string(golden.file) + ": exit " + std::to_string(result.exit_code));
        std::string expected = read_file(g_golden + "/" + golden.file);
        check.require(result.output == expected,
                      std::string(golden.file) + ": output differs: " + result.output);
    }

    CommandResult weight = run_command(quoted(g_mhc) + " load " +
                                       quoted(g_fixtures + "/bad_weight_purity.tbl") + " 2>&1");
    check.require(weight.exit_code == 2, "weight-purity fixture should exit 2");
    check.require(weight.output.find("weight-purity") != std::string::npos,
                  "weight-purity category missing: " + weight.output);

    CommandResult coniveau = run_command(
        quoted(g_mhc) + " load " + quoted(g_fixtures + "/bad_coniveau_level.tbl") + " 2>&1");
    check.require(coniveau.exit_code == 2, "coniveau fixture should exit 2");
    check.require(coniveau.output.find("coniveau-exceeds-level") != std::string::npos,
                  "coniveau-exceeds-level category missing: " + coniveau.output);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: mhc_acceptance <mhc-binary> <fixtures-dir> <golden-dir>\n";
        return 2;
    }
    g_mhc = argv[1];
    g_fixtures = argv[2];
    g_golden = argv[3];

    Pool pool = build_pool();
    std::vector<Triple> combos = valid_triples(pool);
    Rng rng(1789);
    std::vector<Triple> suite;
    for (int i = 0; i < 120; ++i)
        suite.push_back(combos[test::pick(rng, 0, static_cast<int>(combos.size()) - 1)]);

    struct Criterion {
        int number;
        const char* name;
        std::function<void(Checker&)> run;
    };
    const Criterion criteria[] = {
        {1, "blow-up relation holds in the filtered group for both filtrations",
         [&](Checker& c) { criterion_blowup_relation(c, pool, suite); }},
        {2, "exceptional nested dimensions decompose into center strands",
         [&](Checker& c) { criterion_exceptional_dimensions(c, pool, suite); }},
        {3, "graded bookkeeping and the Poincare blow-up identity",
         [&](Checker& c) { criterion_graded_bookkeeping(c, pool, suite); }},
        {4, "operational criterion check on X_bad and mixed-Tate inputs",
         [&](Checker& c) { criterion_operational_check(c, pool.registry); }},
        {5, "Lefschetz multiplication shifts graded data by (2,1)",
         [&](Checker& c) { criterion_lefschetz_multiplication(c, pool, pool.registry); }},
        {6, "classes equal modulo F^m have matching polynomials above -m",
         [&](Checker& c) { criterion_completion(c, pool.registry); }},
        {7, "transfer between equal classes, no transfer otherwise",
         [&](Checker& c) { criterion_transfer(c); }},
        {8, "algebraic property suites (200 randomized instances each)",
         [&](Checker& c) { criterion_algebraic_properties(c, pool.registry); }},
        {9, "CLI machine-format golden files and loader rejections",
         [&](Checker& c) { criterion_cli_contract(c); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Checker check;
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        if (check.ok) {
            std::cout << "PASS criterion " << criterion.number << ": " << criterion.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << criterion.number << ": " << criterion.name << " ["
                      << check.detail << "]\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

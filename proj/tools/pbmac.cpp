/*
 * pbmac: compute permuted-basement Macdonald polynomials, enumerate
 * non-attacking fillings, expand symmetric functions, and run identity
 * verification sweeps.
 *
 * Exit codes: 0 success / all identities hold, 1 counterexample found,
 * 2 usage or argument error.
 */

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbmac/expansions.hpp"
#include "pbmac/io.hpp"

namespace {

using namespace pbmac;

std::string ints_json(const std::vector<int>& v) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ']';
    return out.str();
}

Permutation parse_permutation(const std::vector<int>& one_line) {
    try {
        return Permutation(one_line);
    } catch (const std::exception&) {
        throw CLI::ValidationError("basement must be a permutation of 1..n");
    }
}

// A verification sweep returns the empty string on success or a JSON
// counterexample.
using Sweep = std::function<std::string(int, int)>;

struct Failure {
    std::string json;
};

void fail(const std::string& name, std::initializer_list<std::pair<std::string, std::string>> kv) {
    std::ostringstream out;
    out << "{\"identity\":\"" << name << '"';
    for (const auto& [k, v] : kv) out << ",\"" << k << "\":" << v;
    out << '}';
    throw Failure{out.str()};
}

void for_compositions(int max_n, int max_weight, const std::function<void(const Composition&)>& f) {
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m <= max_weight; ++m)
            for (const Composition& a : compositions_of(m, n)) f(a);
}

void for_comp_perm(int max_n, int max_weight,
                   const std::function<void(const Composition&, const Permutation&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        const auto perms = all_permutations(n);
        for (int m = 0; m <= max_weight; ++m)
            for (const Composition& a : compositions_of(m, n))
                for (const Permutation& s : perms) f(a, s);
    }
}

void for_partitions(int n, int max_weight, const std::function<void(const Composition&)>& f) {
    for (int m = 0; m <= max_weight; ++m)
        for (const Composition& lam : partitions_of(m, n)) f(lam);
}

constexpr unsigned kSweepSeed = 0x5eed;
constexpr int kRandomPolys = 50;

std::map<std::string, Sweep> make_sweeps() {
    std::map<std::string, Sweep> sweeps;

    sweeps["triangularity"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                if (!verify_triangularity(a, s))
                    fail("triangularity", {{"alpha", ints_json(a)}, {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["knop-sahi"] = [](int n, int w) {
        try {
            for_compositions(n, w, [](const Composition& a) {
                if (!verify_knop_sahi(a)) fail("knop-sahi", {{"alpha", ints_json(a)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["spec-to-atom"] = [](int n, int w) {
        try {
            for_compositions(n, w, [](const Composition& a) {
                if (!verify_spec_to_atom(a)) fail("spec-to-atom", {{"alpha", ints_json(a)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["shift"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                if (!verify_shift(a, s))
                    fail("shift", {{"alpha", ints_json(a)}, {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["basement-permute"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                for (int i = 1; i < s.n(); ++i)
                    if (!verify_basement_permute(a, s, i))
                        fail("basement-permute", {{"alpha", ints_json(a)},
                                                  {"basement", ints_json(s.one_line())},
                                                  {"i", std::to_string(i)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["shape-transpose"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                for (int j = 1; j < s.n(); ++j) {
                    if (s(j) != s(j + 1) + 1 || a[j - 1] == a[j]) continue;
                    Composition swapped = a;
                    std::swap(swapped[j - 1], swapped[j]);
                    const XPolynomial direct = macdonald_E({swapped, s});
                    const XPolynomial via_op = shape_transpose({a, s}, j);
                    if (via_op != direct)
                        fail("shape-transpose", {{"alpha", ints_json(a)},
                                                 {"basement", ints_json(s.one_line())},
                                                 {"j", std::to_string(j)}});
                    const XPolynomial back = shape_transpose_apply(via_op, {swapped, s}, j);
                    if (back != macdonald_E({a, s}))
                        fail("shape-transpose-roundtrip", {{"alpha", ints_json(a)},
                                                           {"basement", ints_json(s.one_line())},
                                                           {"j", std::to_string(j)}});
                }
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["partial-symmetry"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                if (!verify_partial_symmetry(a, s))
                    fail("partial-symmetry",
                         {{"alpha", ints_json(a)}, {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["braid"] = [](int n, int w) {
        std::mt19937 rng(kSweepSeed);
        for (int k = 0; k < kRandomPolys; ++k) {
            const XPolynomial f = random_polynomial(rng, n, w, 6);
            for (int i = 1; i + 1 < n; ++i) {
                for (OpKind kind : {OpKind::TTheta, OpKind::TPi}) {
                    const OpLetter a{kind, i}, b{kind, i + 1};
                    if (apply_word(f, {a, b, a}) != apply_word(f, {b, a, b}))
                        return std::string("{\"identity\":\"braid\",\"poly\":") +
                               std::to_string(k) + ",\"i\":" + std::to_string(i) + "}";
                }
            }
            for (int i = 1; i < n; ++i) {
                for (int j = i + 2; j < n; ++j) {
                    const OpLetter a{OpKind::TTheta, i}, b{OpKind::TTheta, j};
                    if (apply_word(f, {a, b}) != apply_word(f, {b, a}))
                        return std::string("{\"identity\":\"braid-commute\",\"poly\":") +
                               std::to_string(k) + ",\"i\":" + std::to_string(i) +
                               ",\"j\":" + std::to_string(j) + "}";
                }
            }
        }
        return std::string();
    };

    sweeps["mixed-braid"] = [](int n, int w) {
        std::mt19937 rng(kSweepSeed);
        for (int k = 0; k < kRandomPolys; ++k) {
            const XPolynomial f = random_polynomial(rng, n, w, 6);
            for (int i = 2; i < n; ++i)
                if (!verify_mixed_braid(f, i))
                    return std::string("{\"identity\":\"mixed-braid\",\"poly\":") +
                           std::to_string(k) + ",\"i\":" + std::to_string(i) + "}";
        }
        return std::string();
    };

    sweeps["quadratic"] = [](int n, int w) {
        std::mt19937 rng(kSweepSeed);
        for (int k = 0; k < kRandomPolys; ++k) {
            const XPolynomial f = random_polynomial(rng, n, w, 6);
            for (int i = 1; i < n; ++i)
                if (!verify_quadratic_and_inverse(i, f))
                    return std::string("{\"identity\":\"quadratic\",\"poly\":") +
                           std::to_string(k) + ",\"i\":" + std::to_string(i) + "}";
        }
        return std::string();
    };

    sweeps["twinv"] = [](int n, int w) {
        try {
            for_comp_perm(n, w, [](const Composition& a, const Permutation& s) {
                if (!verify_twinv_corollary(a, s))
                    fail("twinv", {{"alpha", ints_json(a)}, {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["invariant-subspace"] = [](int n, int w) {
        try {
            for_partitions(n, w, [n](const Composition& lam) {
                const Permutation w0 = Permutation::longest(n);
                std::vector<XPolynomial> basis;
                const auto gammas = rearrangements_of(lam);
                for (const Composition& g : gammas) basis.push_back(macdonald_E({g, w0}));
                for (const Composition& g : gammas) {
                    const XPolynomial e = macdonald_E({g, w0});
                    for (int i = 1; i < n; ++i) {
                        if (!basis_solve(op_ttheta(e, i), basis) ||
                            !basis_solve(op_tpi(e, i), basis))
                            fail("invariant-subspace",
                                 {{"gamma", ints_json(g)}, {"i", std::to_string(i)}});
                    }
                }
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["t-key-pbf"] = [](int n, int w) {
        try {
            for_partitions(n, w, [](const Composition& lam) {
                for (const Composition& target : rearrangements_of(lam))
                    if (!verify_tkey_pbf(lam, target))
                        fail("t-key-pbf", {{"lambda", ints_json(lam)}, {"target", ints_json(target)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["rho-word"] = [](int n, int w) {
        try {
            for_partitions(n, w, [n](const Composition& lam) {
                for (const Composition& alpha : rearrangements_of(lam))
                    for (const Permutation& s : all_permutations(n))
                        if (!verify_rho_word(alpha, s))
                            fail("rho-word", {{"alpha", ints_json(alpha)},
                                              {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["p-sigma-independence"] = [](int n, int w) {
        try {
            for_partitions(n, w, [n](const Composition& lam) {
                const XPolynomial base = symmetric_P(lam, Permutation::identity(n));
                for (const Permutation& s : all_permutations(n))
                    if (symmetric_P(lam, s) != base)
                        fail("p-sigma-independence",
                             {{"lambda", ints_json(lam)}, {"basement", ints_json(s.one_line())}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["hl-oracle"] = [](int n, int w) {
        try {
            for_partitions(n, w, [n](const Composition& lam) {
                const XPolynomial oracle = hall_littlewood_oracle(lam, n);
                const XPolynomial p0 = symmetric_P(lam, Permutation::identity(n))
                                           .specialize(QtScalar::Subst::Zero, QtScalar::Subst::Keep);
                if (p0 != oracle) fail("hl-oracle-q0", {{"lambda", ints_json(lam)}});
                const ExpansionResult hl = hall_littlewood_expand(lam, Permutation::identity(n));
                for (const auto& [g, c] : hl.coefficients)
                    if (!c.is_integer_poly() || c.num().terms().size() != 1 ||
                        c.num().leading_coeff() != 1 || c.num().degree_q() != 0)
                        fail("hl-purity", {{"gamma", ints_json(g)}});
                const XPolynomial rec = reconstruct(hl, n, [&](const Composition& g) {
                    return t_atom({g, Permutation::identity(n)});
                });
                if (rec != oracle) fail("hl-reconstruction", {{"lambda", ints_json(lam)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["schur-oracle"] = [](int n, int w) {
        try {
            for_partitions(n, w, [n](const Composition& lam) {
                const XPolynomial schur = schur_oracle(lam, n);
                const XPolynomial key0 =
                    t_key(lam).specialize(QtScalar::Subst::Keep, QtScalar::Subst::Zero);
                if (key0 != schur) fail("schur-tkey", {{"lambda", ints_json(lam)}});
                const ExpansionResult ex = schur_in_atoms(lam, Permutation::identity(n));
                const XPolynomial rec = reconstruct(ex, n, [&](const Composition& g) {
                    return t_atom({g, Permutation::identity(n)});
                });
                if (rec != schur) fail("schur-reconstruction", {{"lambda", ints_json(lam)}});
            });
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    sweeps["kf-positivity"] = [](int n, int w) {
        try {
            for (int m = 0; m <= w; ++m) {
                for (const Composition& lam : partitions_of(m, n)) {
                    for (const Composition& mu : partitions_of(m, n)) {
                        const QtScalar k = kostka_foulkes(lam, mu, n);
                        if (!k.is_integer_poly() || k.num().degree_q() != 0)
                            fail("kf-not-t-polynomial",
                                 {{"lambda", ints_json(lam)}, {"mu", ints_json(mu)}});
                        for (const auto& [e, c] : k.num().terms())
                            if (c < 0)
                                fail("kf-negative",
                                     {{"lambda", ints_json(lam)}, {"mu", ints_json(mu)}});
                        if (lam == mu && !k.is_one())
                            fail("kf-diagonal", {{"lambda", ints_json(lam)}});
                    }
                }
            }
        } catch (const Failure& f) {
            return f.json;
        }
        return std::string();
    };

    return sweeps;
}

int run_naf(const Composition& shape, const Permutation& basement, const std::string& format) {
    for (const AugmentedFilling& f : enumerate_naf(shape, basement)) {
        if (format == "json") {
            std::ostringstream out;
            std::string base = to_json(f);
            base.pop_back();  // strip closing brace, append the statistics
            out << base << ",\"maj\":" << maj(f) << ",\"coinv\":" << coinv(f) << '}';
            std::cout << out.str() << '\n';
        } else {
            std::cout << to_text(f) << " maj=" << maj(f) << " coinv=" << coinv(f) << '\n';
        }
    }
    return 0;
}

int run_poly(const Composition& shape, const Permutation& basement, bool q0, bool q0t0,
             const std::string& format) {
    XPolynomial p = macdonald_E({shape, basement});
    if (q0t0) p = p.specialize(QtScalar::Subst::Zero, QtScalar::Subst::Zero);
    else if (q0) p = p.specialize(QtScalar::Subst::Zero, QtScalar::Subst::Keep);
    if (format == "json") std::cout << to_json(p) << '\n';
    else if (format == "latex") std::cout << to_latex(p) << '\n';
    else std::cout << to_text(p) << '\n';
    return 0;
}

int run_expand(const std::string& kind, const Composition& lambda, const Permutation& basement) {
    ExpansionResult res;
    if (kind == "P") res = macdonald_P_expand(lambda, basement);
    else if (kind == "HL") res = hall_littlewood_expand(lambda, basement);
    else res = schur_in_atoms(lambda, basement);
    std::cout << to_json(res) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permuted-basement Macdonald polynomial toolkit"};
    app.require_subcommand(1);

    std::vector<int> shape_opt, basement_opt, lambda_opt;
    std::string format = "text";
    bool q0 = false, q0t0 = false;

    auto* naf = app.add_subcommand("naf", "enumerate non-attacking fillings");
    naf->add_option("--shape", shape_opt, "shape, comma separated")->required()->delimiter(',');
    naf->add_option("--basement", basement_opt, "basement permutation")->required()->delimiter(',');
    naf->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* poly = app.add_subcommand("poly", "print a Macdonald polynomial");
    std::string family = "E";
    poly->add_option("family", family, "polynomial family")->check(CLI::IsMember({"E"}));
    poly->add_option("--shape", shape_opt, "shape, comma separated")->required()->delimiter(',');
    poly->add_option("--basement", basement_opt, "basement permutation")->required()->delimiter(',');
    poly->add_flag("--q0", q0, "specialize q = 0 (t-atom)");
    poly->add_flag("--q0t0", q0t0, "specialize q = t = 0 (atom/key)");
    poly->add_option("--format", format, "json|latex|text")
        ->check(CLI::IsMember({"json", "latex", "text"}));

    auto* expand = app.add_subcommand("expand", "symmetric-function expansions");
    std::string expand_kind;
    expand->add_option("kind", expand_kind, "P|HL|schur")
        ->required()
        ->check(CLI::IsMember({"P", "HL", "schur"}));
    expand->add_option("--lambda", lambda_opt, "partition, comma separated")
        ->required()
        ->delimiter(',');
    expand->add_option("--basement", basement_opt, "basement permutation")
        ->required()
        ->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    std::string verify_name;
    int bound_n = 3, max_weight = 3;
    bool list_only = false;
    verify->add_option("name", verify_name, "identity name; see --list");
    verify->add_option("--n", bound_n, "variable count bound (default 3)");
    verify->add_option("--max-weight", max_weight, "weight/degree bound (default 3)");
    verify->add_flag("--list", list_only, "list identity names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    try {
        if (naf->parsed())
            return run_naf(shape_opt, parse_permutation(basement_opt), format);
        if (poly->parsed())
            return run_poly(shape_opt, parse_permutation(basement_opt), q0, q0t0, format);
        if (expand->parsed())
            return run_expand(expand_kind, lambda_opt, parse_permutation(basement_opt));

        const auto sweeps = make_sweeps();
        if (list_only) {
            for (const auto& [name, fn] : sweeps) std::cout << name << '\n';
            return 0;
        }
        auto it = sweeps.find(verify_name);
        if (it == sweeps.end()) {
            std::cerr << "unknown identity '" << verify_name << "'; use verify --list\n";
            return 2;
        }
        const std::string counterexample = it->second(bound_n, max_weight);
        if (!counterexample.empty()) {
            std::cout << counterexample << '\n';
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitkernel/cache.hpp"
#include "hitkernel/checks.hpp"
#include "hitkernel/dual.hpp"
#include "hitkernel/fixtures.hpp"
#include "hitkernel/glaction.hpp"
#include "hitkernel/kameko.hpp"
#include "hitkernel/lambda.hpp"
#include "hitkernel/maps.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCorruptCache = 4;

struct GlobalOpts {
    std::string cache_dir;
    std::string fixture_dir;
    std::string policy = "pow2";
    std::size_t budget_mb = 4096;
    bool serial = false;

    hk::gf2::Budget budget() const {
        hk::gf2::Budget b;
        b.max_bytes = budget_mb * std::size_t(1024) * 1024;
        return b;
    }
    hk::GeneratorPolicy parsed_policy() const { return hk::parse_policy(policy); }
};

json mono_json(const hk::Monomial& m) { return json(m.exponents); }

// A workspace that serves admissible bases from the cache directory when a
// valid entry exists and writes entries back after computing.
struct CachedWorkspace {
    explicit CachedWorkspace(const GlobalOpts& g)
        : opts(g), ws(g.budget(), g.parsed_policy(), !g.serial) {
        if (!g.cache_dir.empty()) lock = std::make_unique<hk::cache::DirLock>(g.cache_dir);
    }

    const hk::AdmissibleBasis& admissible(std::size_t d, std::uint64_t n) {
        auto key = std::make_pair(d, n);
        if (auto it = loaded.find(key); it != loaded.end()) return it->second;
        if (!opts.cache_dir.empty()) {
            try {
                if (auto e = hk::cache::load(opts.cache_dir, d, n, opts.parsed_policy())) {
                    hk::AdmissibleBasis b;
                    b.d = d;
                    b.n = n;
                    b.hit_rank = e->hit_rank;
                    for (const auto& row : e->basis) {
                        b.monomials.push_back(hk::Monomial(row));
                        b.weights.push_back(hk::weight_vector(b.monomials.back()));
                    }
                    return loaded.emplace(key, std::move(b)).first->second;
                }
            } catch (const hk::cache::CorruptCache& ex) {
                // never trust a damaged entry: recompute and overwrite it
                std::cerr << "warning: " << ex.what() << "; recomputing\n";
            }
        }
        const hk::AdmissibleBasis& b = ws.admissible(d, n);
        if (!opts.cache_dir.empty())
            hk::cache::store(opts.cache_dir, hk::cache::entry_from(b, opts.parsed_policy()));
        return b;
    }

    const GlobalOpts& opts;
    hk::Workspace ws;
    std::unique_ptr<hk::cache::DirLock> lock;
    std::map<std::pair<std::size_t, std::uint64_t>, hk::AdmissibleBasis> loaded;
};

json basis_json(const hk::AdmissibleBasis& b) {
    json j;
    j["d"] = b.d;
    j["n"] = b.n;
    j["hit_rank"] = b.hit_rank;
    json arr = json::array();
    for (const auto& m : b.monomials) arr.push_back(mono_json(m));
    j["basis"] = arr;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact F_2 computations for minimal generating sets of the polynomial\n"
                 "algebra over the Steenrod algebra: admissible bases, weight strata,\n"
                 "linear-group invariants, the lambda algebra and transfer checks."};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("HITKERNEL_CACHE")) g.cache_dir = env;
    app.add_option("--cache", g.cache_dir, "Cache directory for computed bases");
    app.add_option("--fixtures", g.fixture_dir, "Fixture directory override");
    app.add_option("--policy", g.policy, "Generator policy: pow2 (default) or all");
    app.add_option("--budget-mb", g.budget_mb, "Memory budget in MiB (default 4096)");
    app.add_flag("--serial", g.serial, "Disable the parallel elimination path");

    // dim
    std::size_t arg_d = 5;
    std::uint64_t arg_n = 8;
    bool as_json = false;
    auto* c_dim = app.add_subcommand("dim", "dim (Q P_d)_n");
    c_dim->add_option("-d", arg_d)->required();
    c_dim->add_option("-n", arg_n)->required();
    c_dim->add_flag("--json", as_json);

    // basis
    std::string arg_omega;
    auto* c_basis = app.add_subcommand("basis", "Admissible monomial basis");
    c_basis->add_option("-d", arg_d)->required();
    c_basis->add_option("-n", arg_n)->required();
    c_basis->add_option("--omega", arg_omega, "Restrict to one weight stratum, e.g. 3,3,1,1");
    c_basis->add_flag("--json", as_json);

    // omega-split
    auto* c_split = app.add_subcommand("omega-split", "Per-weight stratum dimensions");
    c_split->add_option("-d", arg_d)->required();
    c_split->add_option("-n", arg_n)->required();
    c_split->add_flag("--json", as_json);

    // invariants
    std::string arg_group = "gl";
    std::string arg_subspace;
    auto* c_inv = app.add_subcommand("invariants", "Fixed classes of the group action on Q P_d");
    c_inv->add_option("-d", arg_d)->required();
    c_inv->add_option("-n", arg_n)->required();
    c_inv->add_option("--group", arg_group, "gl or sym")->required();
    c_inv->add_option("--subspace", arg_subspace, "kameko-kernel restricts to the kernel block");
    c_inv->add_flag("--json", as_json);

    // kameko
    std::size_t arg_vars = 5;
    std::uint64_t arg_low = 8;
    auto* c_kameko = app.add_subcommand("kameko", "Kameko map data between degrees 2n+d and n");
    c_kameko->add_option("--vars", arg_vars)->required();
    c_kameko->add_option("--low", arg_low)->required();
    c_kameko->add_flag("--json", as_json);

    // sum-conjecture
    auto* c_conj = app.add_subcommand("sum-conjecture", "Admissible-image inclusion check");
    c_conj->add_option("-d", arg_d)->required();
    c_conj->add_option("--omega", arg_omega)->required();
    c_conj->add_flag("--json", as_json);

    // lambda
    auto* c_lambda = app.add_subcommand("lambda", "Lambda algebra operations");
    c_lambda->require_subcommand(1);
    std::string arg_word;
    auto* c_norm = c_lambda->add_subcommand("normalize", "Adem normal form of a word");
    c_norm->add_option("word", arg_word, "e.g. \"L3 L5 L6 L4\"")->required();
    auto* c_diff = c_lambda->add_subcommand("diff", "Differential of a word");
    c_diff->add_option("word", arg_word)->required();
    std::size_t arg_s = 5;
    std::uint64_t arg_t = 21;
    auto* c_ext = c_lambda->add_subcommand("ext", "dim H^{s,t}(Lambda) = dim Ext^{s,s+t}");
    c_ext->add_option("-s", arg_s)->required();
    c_ext->add_option("-t", arg_t)->required();

    // transfer
    auto* c_transfer = app.add_subcommand("transfer", "Transfer witness verification");
    c_transfer->require_subcommand(1);
    auto* c_verify = c_transfer->add_subcommand("verify", "Run the five witness assertions");

    // selftest
    std::string arg_level = "quick";
    auto* c_self = app.add_subcommand("selftest", "Run the verification suite");
    c_self->add_option("--level", arg_level, "quick, full or deep");

    // benchmark lives in a separate binary; see tools/gf2_bench.

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        std::string fdir = g.fixture_dir.empty() ? hk::fixtures::default_dir() : g.fixture_dir;

        if (*c_dim) {
            CachedWorkspace cw(g);
            const auto& b = cw.admissible(arg_d, arg_n);
            if (as_json) {
                json j;
                j["d"] = arg_d;
                j["n"] = arg_n;
                j["dim"] = b.size();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << b.size() << "\n";
            }
            return 0;
        }

        if (*c_basis) {
            CachedWorkspace cw(g);
            const auto& b = cw.admissible(arg_d, arg_n);
            std::optional<hk::WeightVector> omega;
            if (!arg_omega.empty()) omega = hk::parse_weight(arg_omega);
            std::vector<const hk::Monomial*> rows;
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (omega && hk::weight_compare(b.weights[i], *omega) != 0) continue;
                rows.push_back(&b.monomials[i]);
            }
            if (as_json) {
                json arr = json::array();
                for (auto* m : rows) arr.push_back(mono_json(*m));
                json j;
                j["d"] = arg_d;
                j["n"] = arg_n;
                if (omega) j["omega"] = omega->entries;
                j["basis"] = arr;
                j["count"] = rows.size();
                std::cout << j.dump() << "\n";
            } else {
                for (auto* m : rows) std::cout << hk::to_string(*m) << "\n";
            }
            return 0;
        }

        if (*c_split) {
            hk::Workspace ws(g.budget(), g.parsed_policy(), !g.serial);
            const hk::HitSpace& h = ws.hit(arg_d, arg_n);
            json strata = json::array();
            std::size_t total = 0;
            for (const auto& w : hk::weights_of_degree(arg_d, arg_n)) {
                hk::OmegaStratum st = hk::q_omega(h, w);
                if (st.dim == 0) continue;
                total += st.dim;
                if (as_json) {
                    json e;
                    e["omega"] = w.entries;
                    e["dim"] = st.dim;
                    strata.push_back(e);
                } else {
                    std::cout << hk::to_string(w) << " " << st.dim << "\n";
                }
            }
            if (as_json) {
                json j;
                j["d"] = arg_d;
                j["n"] = arg_n;
                j["strata"] = strata;
                j["total"] = total;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "total " << total << "\n";
            }
            return 0;
        }

        if (*c_inv) {
            hk::Workspace ws(g.budget(), g.parsed_policy(), !g.serial);
            hk::Group grp = hk::parse_group(arg_group);
            std::vector<hk::Polynomial> inv;
            if (arg_subspace.empty()) {
                inv = hk::invariants_q(ws, arg_d, arg_n, grp);
            } else if (arg_subspace == "kameko-kernel") {
                if ((arg_n < arg_d) || ((arg_n - arg_d) % 2 != 0)) {
                    std::cerr << "error: degree " << arg_n << " is not of the form 2m+" << arg_d
                              << "\n";
                    return kExitUsage;
                }
                hk::KamekoKernel kk = hk::kernel_kameko_basis(ws, arg_d, (arg_n - arg_d) / 2);
                inv = hk::invariants_on_subspace(ws, arg_d, arg_n, grp, kk.kernel);
            } else {
                std::cerr << "error: unknown subspace " << arg_subspace << "\n";
                return kExitUsage;
            }
            if (as_json) {
                json arr = json::array();
                for (const auto& p : inv) {
                    json terms = json::array();
                    for (const auto& m : p.terms()) terms.push_back(mono_json(m));
                    arr.push_back(terms);
                }
                json j;
                j["d"] = arg_d;
                j["n"] = arg_n;
                j["group"] = arg_group;
                j["count"] = inv.size();
                j["classes"] = arr;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << inv.size() << " invariant class" << (inv.size() == 1 ? "" : "es")
                          << "\n";
                for (const auto& p : inv) std::cout << hk::to_string(p) << "\n";
            }
            return 0;
        }

        if (*c_kameko) {
            hk::Workspace ws(g.budget(), g.parsed_policy(), !g.serial);
            hk::KamekoKernel kk = hk::kernel_kameko_basis(ws, arg_vars, arg_low);
            if (as_json) {
                json j;
                j["d"] = arg_vars;
                j["low_degree"] = kk.low_degree;
                j["high_degree"] = kk.high_degree;
                j["kernel_dim"] = kk.kernel.size();
                j["low_dim"] = kk.low_dim;
                j["high_dim"] = kk.high_dim;
                j["surjective"] = kk.surjective;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "degrees " << kk.high_degree << " -> " << kk.low_degree
                          << ": dim " << kk.high_dim << " -> " << kk.low_dim << ", kernel "
                          << kk.kernel.size() << (kk.surjective ? ", onto" : ", NOT onto") << "\n";
            }
            return 0;
        }

        if (*c_conj) {
            hk::Workspace ws(g.budget(), g.parsed_policy(), !g.serial);
            hk::WeightVector w = hk::parse_weight(arg_omega);
            auto rep = hk::check_sum_conjecture(ws, arg_d, w);
            if (as_json) {
                json j;
                j["d"] = arg_d;
                j["omega"] = w.entries;
                j["holds"] = rep.holds;
                j["image_size"] = rep.image_size;
                json v = json::array();
                for (const auto& m : rep.violations) v.push_back(mono_json(m));
                j["violations"] = v;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (rep.holds ? "holds" : "VIOLATED") << " (image size "
                          << rep.image_size << ")\n";
                for (const auto& m : rep.violations) std::cout << hk::to_string(m) << "\n";
            }
            return rep.holds ? 0 : kExitFailure;
        }

        if (*c_lambda) {
            if (*c_norm) {
                auto w = hk::lambda::parse_word(arg_word);
                std::cout << hk::lambda::to_string(
                                 hk::lambda::adem_normalize(hk::lambda::Element({w})))
                          << "\n";
            } else if (*c_diff) {
                auto w = hk::lambda::parse_word(arg_word);
                std::cout << hk::lambda::to_string(
                                 hk::lambda::differential(hk::lambda::Element({w})))
                          << "\n";
            } else if (*c_ext) {
                std::cout << hk::lambda::homology_dim(arg_s, arg_t) << "\n";
            }
            return 0;
        }

        if (*c_transfer && *c_verify) {
            auto witness = hk::fixtures::load_witness(fdir);
            auto rep = hk::dual::verify_transfer_witness(witness);
            auto line = [](const char* name, bool ok) {
                std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
            };
            line("1 Z is A2+-annihilated", rep.z_annihilated);
            line("2 <Z, q2> = 1", rep.pairing_one);
            line("3 psi_5(Z) is a cycle", rep.psi_cycle);
            line("4 psi_5(Z) = l3 f0bar + boundary", rep.psi_matches);
            line("5 dim H^{5,21} = 1", rep.ext_dim_one);
            return rep.all() ? 0 : kExitFailure;
        }

        if (*c_self) {
            hk::checks::Options opts;
            opts.budget = g.budget();
            opts.parallel = !g.serial;
            opts.fixture_dir = fdir;
            if (arg_level == "quick")
                opts.level = hk::checks::Level::Quick;
            else if (arg_level == "full")
                opts.level = hk::checks::Level::Full;
            else if (arg_level == "deep")
                opts.level = hk::checks::Level::Deep;
            else {
                std::cerr << "error: unknown level " << arg_level << "\n";
                return kExitUsage;
            }
            auto results = hk::checks::run_suite(opts, [](const hk::checks::Result& r) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                char buf[32];
                std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
                std::cout << buf;
                if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
                std::cout << "\n";
            });
            return hk::checks::all_passed(results) ? 0 : kExitFailure;
        }
    } catch (const hk::gf2::BudgetExceeded& ex) {
        std::cerr << "error: budget: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const hk::cache::CorruptCache& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCorruptCache;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFailure;
    }
    return 0;
}

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphsym/automorphism.hpp"
#include "graphsym/distinguishing.hpp"
#include "graphsym/enumerate.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/graph6.hpp"
#include "graphsym/hamiltonian.hpp"
#include "graphsym/metrics.hpp"
#include "graphsym/power.hpp"

namespace graphsym {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

// Caps for one verification run. Per-claim natural instance ranges are capped
// downward by max_n / max_k; they never grow past their documented defaults
// except for parameters intrinsic to a claim (a path power's exponent runs to
// n-1 regardless of max_k).
struct Limits {
    int max_n = 8;
    int max_k = 3;
    std::int64_t budget = 100'000'000;
    std::int64_t aut_cap = 1'000'000;
    int ham_cap = 12;
    std::uint32_t seed = 20250808;
    int sample_count = 20;
};

struct ClaimRecord {
    std::string claim;
    std::string instance;
    Json expected;
    Json computed;
    std::string verdict;  // PASS | FAIL | SKIP
    std::string reason;   // reason for SKIP, optional note otherwise
};

// Memoized expensive computations, keyed by graph6 string.
class ClaimContext {
public:
    explicit ClaimContext(const Limits& lim) : lim_(lim) {}

    const AutomorphismSet& auts(const Graph& g) {
        const std::string key = graph6_write(g);
        auto it = aut_cache_.find(key);
        if (it != aut_cache_.end()) return *it->second;
        auto set = std::make_shared<AutomorphismSet>(
            enumerate_automorphisms(g, AutLimits{lim_.aut_cap, 64}));
        return *aut_cache_.emplace(key, std::move(set)).first->second;
    }

    int aut_order(const Graph& g) { return auts(g).order(); }

    int D(const Graph& g) {
        const std::string key = graph6_write(g);
        auto it = d_cache_.find(key);
        if (it != d_cache_.end()) return it->second;
        int v = distinguishing_number(g, auts(g), SearchLimits{lim_.budget}).value;
        d_cache_.emplace(key, v);
        return v;
    }

    std::optional<int> Dprime(const Graph& g) {
        const std::string key = graph6_write(g);
        auto it = dp_cache_.find(key);
        if (it != dp_cache_.end()) return it->second;
        auto res = distinguishing_index(g, auts(g), SearchLimits{lim_.budget});
        std::optional<int> v = res ? std::optional<int>(res->value) : std::nullopt;
        dp_cache_.emplace(key, v);
        return v;
    }

    int Dtotal(const Graph& g) {
        const std::string key = graph6_write(g);
        auto it = dt_cache_.find(key);
        if (it != dt_cache_.end()) return it->second;
        int v = total_distinguishing_number(g, auts(g), SearchLimits{lim_.budget}).value;
        dt_cache_.emplace(key, v);
        return v;
    }

    const Limits& limits() const { return lim_; }

private:
    Limits lim_;
    std::map<std::string, std::shared_ptr<AutomorphismSet>> aut_cache_;
    std::map<std::string, int> d_cache_, dt_cache_;
    std::map<std::string, std::optional<int>> dp_cache_;
};

struct Claim {
    std::string id;
    std::string description;
    bool report_only = false;  // FAILs are reported but never fail a run
    std::function<void(ClaimContext&, std::vector<ClaimRecord>&)> run;
};

namespace detail {

inline std::string inst(const Graph& g) { return "g=" + graph6_write(g); }

inline std::string inst(const Graph& g, const std::string& params) {
    return "g=" + graph6_write(g) + ";" + params;
}

inline ClaimRecord rec(const std::string& claim, const std::string& instance, Json expected,
                       Json computed, bool pass) {
    return ClaimRecord{claim, instance, std::move(expected), std::move(computed),
                       pass ? "PASS" : "FAIL", ""};
}

inline ClaimRecord skip(const std::string& claim, const std::string& instance,
                        const std::string& reason) {
    return ClaimRecord{claim, instance, nullptr, nullptr, "SKIP", reason};
}

// Runs one instance checker; caps and budgets turn into SKIP records.
template <typename F>
inline void guarded(const std::string& claim, const std::string& instance,
                    std::vector<ClaimRecord>& out, F&& f) {
    try {
        f();
    } catch (const CapExceeded& e) {
        out.push_back(skip(claim, instance, e.what()));
    } catch (const BudgetExceeded& e) {
        out.push_back(skip(claim, instance, e.what()));
    }
}

// Connected instances for n in [lo, hi] (hi already capped): exhaustive for
// n <= 7, seeded samples for 8 <= n <= 10.
template <typename F>
inline void for_connected(ClaimContext& ctx, int lo, int hi, F&& fn) {
    for (int n = lo; n <= hi; ++n) {
        if (n <= 7) {
            for (const auto& g : connected_graphs(n)) fn(g);
        } else if (n <= 10) {
            for (const auto& g :
                 sampled_connected_graphs(n, ctx.limits().sample_count, ctx.limits().seed))
                fn(g);
        }
    }
}

inline int isqrt_ceil(int x) {
    int s = 0;
    while (s * s < x) ++s;
    return s;
}

inline Json opt_json(const std::optional<int>& v) {
    return v ? Json(*v) : Json("undefined");
}

}  // namespace detail

inline std::vector<Claim> build_claim_registry() {
    using detail::for_connected;
    using detail::guarded;
    using detail::inst;
    using detail::rec;
    using detail::skip;

    std::vector<Claim> reg;
    auto add = [&](std::string id, std::string desc, bool report_only,
                   std::function<void(ClaimContext&, std::vector<ClaimRecord>&)> run) {
        reg.push_back(Claim{std::move(id), std::move(desc), report_only, std::move(run)});
    };

    // ---- Section 2: natural powers ----

    add("L2.i", "G^t is complete for every t >= diameter(G) (connected G)", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 1, std::min(6, ctx.limits().max_n), [&](const Graph& g) {
                Metrics m = metrics(g);
                std::set<int> ts = {std::max(m.diameter, 1), std::max(m.diameter, 1) + 1};
                for (int t : ts) {
                    auto instance = inst(g, "t=" + std::to_string(t));
                    guarded("L2.i", instance, out, [&] {
                        bool complete = power(g, t).is_complete();
                        out.push_back(rec("L2.i", instance, true, complete, complete));
                    });
                }
            });
        });

    add("L2.ii", "power composition: G^(mn) equals (G^m)^n under the identity map", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 1, std::min(7, ctx.limits().max_n), [&](const Graph& g) {
                for (int m = 1; m <= kcap; ++m)
                    for (int n = 1; n <= kcap; ++n) {
                        auto instance =
                            inst(g, "m=" + std::to_string(m) + ";n=" + std::to_string(n));
                        guarded("L2.ii", instance, out, [&] {
                            bool eq = graph_equal(power(g, m * n), power(power(g, m), n));
                            out.push_back(rec("L2.ii", instance, true, eq, eq));
                        });
                    }
            });
        });

    add("L2.iii", "claimed power distance q+r (d = kq + r) versus BFS distance on path powers",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int len = 2; len <= std::min(8, ctx.limits().max_n); ++len) {
                Graph p = path_graph(len);
                for (int k = 2; k <= std::min(4, std::max(2, ctx.limits().max_k)); ++k) {
                    Graph pk = power(p, k);
                    auto dist = single_source_distances(pk, 0);
                    for (int d = 1; d < len; ++d) {
                        auto instance =
                            inst(p, "k=" + std::to_string(k) + ";x=0;y=" + std::to_string(d));
                        int claimed = power_distance_claim(d, k);
                        int actual = dist[d];
                        out.push_back(
                            rec("L2.iii", instance, claimed, actual, claimed == actual));
                    }
                }
            }
        });

    add("T2.2.i", "Aut(G) is a subgroup of Aut(G^k) for k >= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 2, std::min(7, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("T2.2.i", instance, out, [&] {
                        bool sub = is_subgroup(ctx.auts(g), ctx.auts(power(g, k)));
                        out.push_back(rec("T2.2.i", instance, true, sub, sub));
                    });
                }
            });
        });

    add("T2.2.ii", "Aut(G^(2t-1)) is a subgroup of Aut(G^(2t)) for 1 <= t <= radius", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 2, std::min(7, ctx.limits().max_n), [&](const Graph& g) {
                int r = metrics(g).radius;
                for (int t = 1; t <= r; ++t) {
                    auto instance = inst(g, "t=" + std::to_string(t));
                    guarded("T2.2.ii", instance, out, [&] {
                        bool sub = is_subgroup(ctx.auts(power(g, 2 * t - 1)),
                                               ctx.auts(power(g, 2 * t)));
                        out.push_back(rec("T2.2.ii", instance, true, sub, sub));
                    });
                }
            });
        });

    add("C2.3.i", "D(G) <= D(G^k) for k >= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 2, std::min(6, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("C2.3.i", instance, out, [&] {
                        int lhs = ctx.D(g), rhs = ctx.D(power(g, k));
                        out.push_back(rec("C2.3.i", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", rhs}}, lhs <= rhs));
                    });
                }
            });
        });

    add("C2.3.ii", "D(G^(2t-1)) <= D(G^(2t)) for 1 <= t <= radius", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 2, std::min(6, ctx.limits().max_n), [&](const Graph& g) {
                int r = metrics(g).radius;
                for (int t = 1; t <= r; ++t) {
                    auto instance = inst(g, "t=" + std::to_string(t));
                    guarded("C2.3.ii", instance, out, [&] {
                        int lhs = ctx.D(power(g, 2 * t - 1)), rhs = ctx.D(power(g, 2 * t));
                        out.push_back(rec("C2.3.ii", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", rhs}}, lhs <= rhs));
                    });
                }
            });
        });

    add("T2.4", "D(G^(r+i)) is at least the number of vertices within distance i of the center",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 2, std::min(6, ctx.limits().max_n), [&](const Graph& g) {
                Metrics m = metrics(g);
                for (int i = 0; i + m.radius <= m.diameter; ++i) {
                    auto instance = inst(g, "i=" + std::to_string(i));
                    guarded("T2.4", instance, out, [&] {
                        int count = 0;
                        for (int x = 0; x < g.vertex_count(); ++x) {
                            bool close = std::any_of(
                                m.center.begin(), m.center.end(),
                                [&](int c) { return m.at(c, x) <= i; });
                            if (close) ++count;
                        }
                        int d = ctx.D(power(g, m.radius + i));
                        out.push_back(rec("T2.4", instance, "D >= bound",
                                          Json{{"D", d}, {"bound", count}}, d >= count));
                    });
                }
            });
        });

    add("C2.5", "order >= 7: the cube of G is traceable and D'(G^3) <= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            if (ctx.limits().max_n < 7) {
                out.push_back(skip("C2.5", "(none)", "requires max-n >= 7"));
                return;
            }
            for_connected(ctx, 7, 7, [&](const Graph& g) {
                auto instance = inst(g, "i=3");
                guarded("C2.5", instance, out, [&] {
                    Graph cube = power(g, 3);
                    auto ham = hamiltonian_path_exists(cube, ctx.limits().ham_cap);
                    if (!ham) {
                        out.push_back(skip("C2.5", instance, "hamiltonian cap exceeded"));
                        return;
                    }
                    auto dp = ctx.Dprime(cube);
                    bool ok = *ham && dp && *dp <= 2;
                    out.push_back(rec("C2.5", instance, "traceable and D' <= 2",
                                      Json{{"traceable", *ham},
                                           {"Dprime", detail::opt_json(dp)}},
                                      ok));
                });
            });
        });

    add("R2.6", "non-path diameters: <= 3 for n <= 5 (with D'(G^3) = 3), <= 4 for n = 6 "
                "(with D'(G^3) <= 3); the n = 6 diameter-4 family has 8 members",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int hi = std::min(6, ctx.limits().max_n);
            int diam4 = 0;
            for_connected(ctx, 3, hi, [&](const Graph& g) {
                if (is_path_graph_shape(g)) return;
                const int n = g.vertex_count();
                auto instance = inst(g);
                guarded("R2.6", instance, out, [&] {
                    int diam = metrics(g).diameter;
                    auto dp = ctx.Dprime(power(g, 3));
                    if (n <= 5) {
                        bool ok = diam <= 3 && dp && *dp == 3;
                        out.push_back(rec("R2.6", instance, "diam <= 3 and D'(G^3) = 3",
                                          Json{{"diam", diam},
                                               {"Dprime", detail::opt_json(dp)}},
                                          ok));
                    } else {
                        if (diam == 4) ++diam4;
                        bool ok = diam <= 4 && dp && *dp <= 3;
                        out.push_back(rec("R2.6", instance, "diam <= 4 and D'(G^3) <= 3",
                                          Json{{"diam", diam},
                                               {"Dprime", detail::opt_json(dp)}},
                                          ok));
                    }
                });
            });
            if (hi >= 6)
                out.push_back(rec("R2.6", "n=6;diameter-4-count", 8, diam4, diam4 == 8));
        });

    add("T2.7", "D(P_n^k) = 2 for k <= r, and = 2k-n for r < k <= d", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int n = 4; n <= std::min(7, ctx.limits().max_n); ++n) {
                Graph p = path_graph(n);
                int r = n / 2;
                for (int k = 2; k <= n - 1; ++k) {
                    auto instance = inst(p, "k=" + std::to_string(k));
                    guarded("T2.7", instance, out, [&] {
                        int expected = (k <= r) ? 2 : 2 * k - n;
                        int actual = ctx.D(power(p, k));
                        out.push_back(rec("T2.7", instance, expected, actual,
                                          expected == actual));
                    });
                }
            }
        });

    add("C2.8", "D'(P_n^k) = D'(P_n) for k <= r, and = D'(K_{2k-n-2}) for r < k <= d", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int n = 3; n <= std::min(7, ctx.limits().max_n); ++n) {
                Graph p = path_graph(n);
                int r = n / 2;
                for (int k = 2; k <= n - 1; ++k) {
                    auto instance = inst(p, "k=" + std::to_string(k));
                    guarded("C2.8", instance, out, [&] {
                        Json expected;
                        std::optional<int> expect_val;
                        if (k <= r) {
                            expect_val = ctx.Dprime(p);
                            expected = detail::opt_json(expect_val);
                        } else {
                            int m = 2 * k - n - 2;
                            if (m < 2) {
                                expected = "undefined(K_" + std::to_string(m) + ")";
                            } else {
                                expect_val = ctx.Dprime(complete_graph(m));
                                expected = detail::opt_json(expect_val);
                            }
                        }
                        auto actual = ctx.Dprime(power(p, k));
                        bool ok = expect_val.has_value() && actual.has_value() &&
                                  *expect_val == *actual;
                        out.push_back(rec("C2.8", instance, expected,
                                          detail::opt_json(actual), ok));
                    });
                }
            }
        });

    add("C2.9", "D'(G^m) <= 3 for m >= 3 (checked at m = 3)", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 3, std::min(7, ctx.limits().max_n), [&](const Graph& g) {
                auto instance = inst(g, "m=3");
                guarded("C2.9", instance, out, [&] {
                    auto dp = ctx.Dprime(power(g, 3));
                    bool ok = dp && *dp <= 3;
                    out.push_back(
                        rec("C2.9", instance, "D' <= 3", detail::opt_json(dp), ok));
                });
            });
        });

    add("T2.10", "Aut(C_n^k) has order 2n for n > 2k and order n! for n <= 2k", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int n = 3; n <= std::min(8, ctx.limits().max_n); ++n) {
                Graph c = cycle_graph(n);
                for (int k = 2; k <= std::min(3, ctx.limits().max_k); ++k) {
                    auto instance = inst(c, "k=" + std::to_string(k));
                    guarded("T2.10", instance, out, [&] {
                        long long expected = 1;
                        if (n > 2 * k) {
                            expected = 2LL * n;
                        } else {
                            for (int i = 2; i <= n; ++i) expected *= i;
                        }
                        long long actual = ctx.aut_order(power(c, k));
                        out.push_back(
                            rec("T2.10", instance, expected, actual, expected == actual));
                    });
                }
            }
        });

    add("C2.11.i", "D(C_n^k) = D(C_n) for n > 2k and = D(K_n) for n <= 2k", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int n = 3; n <= std::min(8, ctx.limits().max_n); ++n) {
                Graph c = cycle_graph(n);
                for (int k = 2; k <= std::min(3, ctx.limits().max_k); ++k) {
                    auto instance = inst(c, "k=" + std::to_string(k));
                    guarded("C2.11.i", instance, out, [&] {
                        int expected = (n > 2 * k) ? ctx.D(c) : ctx.D(complete_graph(n));
                        int actual = ctx.D(power(c, k));
                        out.push_back(
                            rec("C2.11.i", instance, expected, actual, expected == actual));
                    });
                }
            }
        });

    add("C2.11.ii", "D'(C_n^k) = D'(C_n) for n > 2k and = D'(K_n) for n <= 2k", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for (int n = 3; n <= std::min(8, ctx.limits().max_n); ++n) {
                Graph c = cycle_graph(n);
                for (int k = 2; k <= std::min(3, ctx.limits().max_k); ++k) {
                    auto instance = inst(c, "k=" + std::to_string(k));
                    guarded("C2.11.ii", instance, out, [&] {
                        auto expected =
                            (n > 2 * k) ? ctx.Dprime(c) : ctx.Dprime(complete_graph(n));
                        auto actual = ctx.Dprime(power(c, k));
                        bool ok = expected && actual && *expected == *actual;
                        out.push_back(rec("C2.11.ii", instance, detail::opt_json(expected),
                                          detail::opt_json(actual), ok));
                    });
                }
            }
        });

    add("C2.12", "n >= 7, G^2 not complete, |E| >= (n^2+10-5n)/2 implies D'(G^2) <= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            if (ctx.limits().max_n < 7) {
                out.push_back(skip("C2.12", "(none)", "requires max-n >= 7"));
                return;
            }
            bool any = false;
            for_connected(ctx, 7, 7, [&](const Graph& g) {
                const int n = g.vertex_count();
                if (2 * g.edge_count() < n * n + 10 - 5 * n) return;
                Graph sq = power(g, 2);
                if (sq.is_complete()) return;
                any = true;
                auto instance = inst(g);
                guarded("C2.12", instance, out, [&] {
                    auto dp = ctx.Dprime(sq);
                    bool ok = dp && *dp <= 2;
                    out.push_back(
                        rec("C2.12", instance, "D'(G^2) <= 2", detail::opt_json(dp), ok));
                });
            });
            if (!any)
                out.push_back(skip("C2.12", "(none)", "no instance satisfies the hypothesis"));
        });

    add("CONJ.i", "conjecture (sampled): r < d <= 2r-2 implies Aut(G) = Aut(G^2)", true,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            bool any = false;
            for_connected(ctx, 2, std::min(8, ctx.limits().max_n), [&](const Graph& g) {
                Metrics m = metrics(g);
                if (!(m.radius < m.diameter && m.diameter <= 2 * m.radius - 2)) return;
                any = true;
                auto instance = inst(g);
                guarded("CONJ.i", instance, out, [&] {
                    const auto& a = ctx.auts(g);
                    const auto& b = ctx.auts(power(g, 2));
                    bool eq = a.order() == b.order() && is_subgroup(a, b);
                    out.push_back(rec("CONJ.i", instance, "Aut(G) = Aut(G^2)",
                                      Json{{"aut", a.order()}, {"aut2", b.order()}}, eq));
                });
            });
            if (!any)
                out.push_back(skip("CONJ.i", "(none)", "no instance satisfies the hypothesis"));
        });

    add("CONJ.ii", "conjecture (sampled): bipartite with r > 2 implies Aut(G) = Aut(G^2)", true,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            bool any = false;
            for_connected(ctx, 2, std::min(8, ctx.limits().max_n), [&](const Graph& g) {
                if (!is_bipartite(g) || metrics(g).radius <= 2) return;
                any = true;
                auto instance = inst(g);
                guarded("CONJ.ii", instance, out, [&] {
                    const auto& a = ctx.auts(g);
                    const auto& b = ctx.auts(power(g, 2));
                    bool eq = a.order() == b.order() && is_subgroup(a, b);
                    out.push_back(rec("CONJ.ii", instance, "Aut(G) = Aut(G^2)",
                                      Json{{"aut", a.order()}, {"aut2", b.order()}}, eq));
                });
            });
            if (!any)
                out.push_back(skip("CONJ.ii", "(none)", "no instance satisfies the hypothesis"));
        });

    // ---- Section 3: subdivisions and the distinguishing number ----

    add("L3.1", "every automorphism of G^(1/k) restricts to an automorphism of G "
                "(connected, n >= 3, not a cycle)",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("L3.1", instance, out, [&] {
                        SubdividedGraph sg = subdivide(g, k);
                        bool all_ok = true;
                        for (const auto& f : ctx.auts(sg.graph).elements) {
                            try {
                                restrict_to_base(sg, f);
                            } catch (const std::invalid_argument&) {
                                all_ok = false;
                                break;
                            }
                        }
                        out.push_back(rec("L3.1", instance, true, all_ok, all_ok));
                    });
                }
            });
        });

    add("O3.2", "superedge images: f maps internal vertices position-wise (or reversed when "
                "the endpoint order flips)",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("O3.2", instance, out, [&] {
                        SubdividedGraph sg = subdivide(g, k);
                        auto find_se = [&](int u, int v) -> const SuperEdge& {
                            for (const auto& se : sg.superedges)
                                if (se.u == std::min(u, v) && se.v == std::max(u, v)) return se;
                            throw std::logic_error("superedge lookup");
                        };
                        bool all_ok = true;
                        for (const auto& f : ctx.auts(sg.graph).elements) {
                            for (const auto& se : sg.superedges) {
                                int iu = f(se.u), iv = f(se.v);
                                const auto& target = find_se(iu, iv);
                                for (int t = 1; t < k && all_ok; ++t) {
                                    int image = f(se.internal[t - 1]);
                                    int want = (iu < iv) ? target.internal[t - 1]
                                                         : target.internal[k - t - 1];
                                    if (image != want) all_ok = false;
                                }
                                if (!all_ok) break;
                            }
                            if (!all_ok) break;
                        }
                        out.push_back(rec("O3.2", instance, true, all_ok, all_ok));
                    });
                }
            });
        });

    add("F3.3", "D(P_n^(1/k)) = 2 (n >= 2) and D(C_n^(1/k)) = 2 (n >= 3) for k >= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            auto run_one = [&](const Graph& g) {
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("F3.3", instance, out, [&] {
                        int d = ctx.D(subdivide(g, k).graph);
                        out.push_back(rec("F3.3", instance, 2, d, d == 2));
                    });
                }
            };
            for (int n = 2; n <= std::min(6, ctx.limits().max_n); ++n) run_one(path_graph(n));
            for (int n = 3; n <= std::min(6, ctx.limits().max_n); ++n) run_one(cycle_graph(n));
        });

    add("C3.4.i", "|Aut(G^(1/k))| = |Aut(G)| for connected non-cycle G, n >= 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("C3.4.i", instance, out, [&] {
                        int expected = ctx.aut_order(g);
                        int actual = ctx.aut_order(subdivide(g, k).graph);
                        out.push_back(
                            rec("C3.4.i", instance, expected, actual, expected == actual));
                    });
                }
            });
        });

    add("C3.4.ii", "D(G^(1/k)) <= D(G) for connected non-cycle G, n >= 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("C3.4.ii", instance, out, [&] {
                        int lhs = ctx.D(subdivide(g, k).graph), rhs = ctx.D(g);
                        out.push_back(rec("C3.4.ii", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", rhs}}, lhs <= rhs));
                    });
                }
            });
        });

    add("T3.6", "D''(G) <= ceil(sqrt(max degree)) for connected G, n >= 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 3, std::min(6, ctx.limits().max_n), [&](const Graph& g) {
                auto instance = inst(g);
                guarded("T3.6", instance, out, [&] {
                    int bound = kalinowski_bound(g.max_degree());
                    int dt = ctx.Dtotal(g);
                    out.push_back(rec("T3.6", instance, "D'' <= bound",
                                      Json{{"Dtotal", dt}, {"bound", bound}}, dt <= bound));
                });
            });
        });

    add("T3.7", "D(G^(1/2)) = D''(G) for connected non-cycle G, n >= 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                auto instance = inst(g);
                guarded("T3.7", instance, out, [&] {
                    int lhs = ctx.D(subdivide(g, 2).graph);
                    int rhs = ctx.Dtotal(g);
                    out.push_back(rec("T3.7", instance, rhs, lhs, lhs == rhs));
                });
            });
        });

    add("T3.8", "D(G^(1/k)) <= min{s : 2^k + sum_{j=3}^s j^(k-1) >= max degree}", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("T3.8", instance, out, [&] {
                        int bound = sphere_bound(k, g.max_degree());
                        int d = ctx.D(subdivide(g, k).graph);
                        out.push_back(rec("T3.8", instance, "D <= bound",
                                          Json{{"D", d}, {"bound", bound}}, d <= bound));
                    });
                }
            });
        });

    add("T3.9", "D(K_{1,m}^(1/k)) equals the sphere bound exactly, m >= 3, k >= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for (int m = 3; m <= std::min(6, ctx.limits().max_n - 1); ++m) {
                Graph star = star_graph(m);
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(star, "k=" + std::to_string(k));
                    guarded("T3.9", instance, out, [&] {
                        int expected = sphere_bound(k, m);
                        int actual = ctx.D(subdivide(star, k).graph);
                        out.push_back(
                            rec("T3.9", instance, expected, actual, expected == actual));
                    });
                }
            }
        });

    // ---- Section 4: subdivisions and the distinguishing index ----

    add("F4.0", "D'(P_n^(1/k)) = 2 (n >= 2) and D'(C_n^(1/k)) = 2 (n >= 3) for k >= 2", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            auto run_one = [&](const Graph& g) {
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("F4.0", instance, out, [&] {
                        auto d = ctx.Dprime(subdivide(g, k).graph);
                        out.push_back(rec("F4.0", instance, 2, detail::opt_json(d),
                                          d && *d == 2));
                    });
                }
            };
            for (int n = 2; n <= std::min(6, ctx.limits().max_n); ++n) run_one(path_graph(n));
            for (int n = 3; n <= std::min(6, ctx.limits().max_n); ++n) run_one(cycle_graph(n));
        });

    add("T4.1", "D(G^(1/(k+1))) <= D'(G^(1/k)) for connected non-cycle G, n >= 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("T4.1", instance, out, [&] {
                        int lhs = ctx.D(subdivide(g, k + 1).graph);
                        auto rhs = ctx.Dprime(subdivide(g, k).graph);
                        bool ok = rhs && lhs <= *rhs;
                        out.push_back(rec("T4.1", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", detail::opt_json(rhs)}},
                                          ok));
                    });
                }
            });
        });

    add("T4.2", "D'(G^(1/2)) <= ceil((-1+sqrt(1+8 D'(G)))/2) for connected non-cycle G", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                auto instance = inst(g);
                guarded("T4.2", instance, out, [&] {
                    auto base = ctx.Dprime(g);
                    auto lhs = ctx.Dprime(subdivide(g, 2).graph);
                    if (!base || !lhs) {
                        out.push_back(skip("T4.2", instance, "D' undefined"));
                        return;
                    }
                    int bound = pair_bound(*base);
                    out.push_back(rec("T4.2", instance, "lhs <= bound",
                                      Json{{"lhs", *lhs}, {"bound", bound}}, *lhs <= bound));
                });
            });
        });

    add("T4.3", "D'(G^(1/k)) <= d'_k (reversal-distinct tuple bound) for connected non-cycle G",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(3, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                if (is_cycle_graph_shape(g)) return;
                for (int k = 2; k <= kcap; ++k) {
                    auto instance = inst(g, "k=" + std::to_string(k));
                    guarded("T4.3", instance, out, [&] {
                        auto base = ctx.Dprime(g);
                        auto lhs = ctx.Dprime(subdivide(g, k).graph);
                        if (!base || !lhs) {
                            out.push_back(skip("T4.3", instance, "D' undefined"));
                            return;
                        }
                        int bound = tuple_bound(*base, k);
                        out.push_back(rec("T4.3", instance, "lhs <= bound",
                                          Json{{"lhs", *lhs}, {"bound", bound}},
                                          *lhs <= bound));
                    });
                }
            });
        });

    add("C4.4", "D'(G^(m/k)) <= 3 for m >= 3 (both construction orders, checked at m = 3)",
        false, [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(2, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 1; k <= kcap; ++k) {
                    for (auto order : {FractionalOrder::subdivide_then_power,
                                       FractionalOrder::power_then_subdivide}) {
                        const char* tag = order == FractionalOrder::subdivide_then_power
                                              ? "sp" : "ps";
                        auto instance = inst(g, "m=3;k=" + std::to_string(k) + ";order=" + tag);
                        guarded("C4.4", instance, out, [&] {
                            Graph h = fractional_power(g, 3, k, order);
                            auto dp = ctx.Dprime(h);
                            bool ok = dp && *dp <= 3;
                            out.push_back(rec("C4.4", instance, "D' <= 3",
                                              detail::opt_json(dp), ok));
                        });
                    }
                }
            });
        });

    add("C4.5.i", "D(G^(1/k)) <= D((G^(1/k))^m) at m = 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(2, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 1; k <= kcap; ++k) {
                    auto instance = inst(g, "m=3;k=" + std::to_string(k));
                    guarded("C4.5.i", instance, out, [&] {
                        Graph sub = subdivide(g, k).graph;
                        int lhs = ctx.D(sub), rhs = ctx.D(power(sub, 3));
                        out.push_back(rec("C4.5.i", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", rhs}}, lhs <= rhs));
                    });
                }
            });
        });

    add("C4.5.ii", "D((G^m)^(1/k)) <= D(G^m) at m = 3", false,
        [](ClaimContext& ctx, std::vector<ClaimRecord>& out) {
            int kcap = std::min(2, ctx.limits().max_k);
            for_connected(ctx, 3, std::min(5, ctx.limits().max_n), [&](const Graph& g) {
                for (int k = 1; k <= kcap; ++k) {
                    auto instance = inst(g, "m=3;k=" + std::to_string(k));
                    guarded("C4.5.ii", instance, out, [&] {
                        Graph cube = power(g, 3);
                        int lhs = ctx.D(subdivide(cube, k).graph), rhs = ctx.D(cube);
                        out.push_back(rec("C4.5.ii", instance, "lhs <= rhs",
                                          Json{{"lhs", lhs}, {"rhs", rhs}}, lhs <= rhs));
                    });
                }
            });
        });

    return reg;
}

inline const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = build_claim_registry();
    return reg;
}

inline std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
}

inline bool claim_is_report_only(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c.report_only;
    return false;
}

// Runs the selected claims (empty selection = all). Unknown ids are rejected
// before any work. Records come back sorted by (claim id, instance key).
inline std::vector<ClaimRecord> run_claims(const std::vector<std::string>& selection,
                                           const Limits& limits) {
    const auto& reg = claim_registry();
    std::vector<const Claim*> todo;
    if (selection.empty()) {
        for (const auto& c : reg) todo.push_back(&c);
    } else {
        for (const auto& id : selection) {
            auto it = std::find_if(reg.begin(), reg.end(),
                                   [&](const Claim& c) { return c.id == id; });
            if (it == reg.end())
                throw std::invalid_argument("unknown claim id: " + id);
            todo.push_back(&*it);
        }
    }
    ClaimContext ctx(limits);
    std::vector<ClaimRecord> records;
    for (const Claim* c : todo) c->run(ctx, records);
    std::sort(records.begin(), records.end(), [](const ClaimRecord& a, const ClaimRecord& b) {
        if (a.claim != b.claim) return a.claim < b.claim;
        return a.instance < b.instance;
    });
    return records;
}

inline Json report_to_json(const std::vector<ClaimRecord>& records, const Limits& limits) {
    Json j;
    j["meta"]["version"] = kVersion;
    j["meta"]["seed"] = limits.seed;
    j["meta"]["limits"] = {{"max_n", limits.max_n},
                           {"max_k", limits.max_k},
                           {"budget", limits.budget},
                           {"aut_cap", limits.aut_cap},
                           {"ham_cap", limits.ham_cap},
                           {"sample_count", limits.sample_count}};
    Json recs = Json::array();
    for (const auto& r : records) {
        Json e = {{"claim", r.claim},
                  {"instance", r.instance},
                  {"expected", r.expected},
                  {"computed", r.computed},
                  {"verdict", r.verdict}};
        if (!r.reason.empty()) e["reason"] = r.reason;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

// Markdown rendering is a pure function of the JSON report.
inline std::string report_to_markdown(const Json& report) {
    std::string md = "# Claim verification report\n\n";
    md += "version " + report["meta"]["version"].get<std::string>() +
          ", seed " + std::to_string(report["meta"]["seed"].get<std::uint32_t>()) + "\n\n";

    std::map<std::string, std::array<int, 3>> tally;  // pass, fail, skip
    for (const auto& r : report["records"]) {
        auto& t = tally[r["claim"].get<std::string>()];
        const std::string v = r["verdict"].get<std::string>();
        if (v == "PASS") ++t[0];
        else if (v == "FAIL") ++t[1];
        else ++t[2];
    }
    md += "| claim | pass | fail | skip |\n|---|---|---|---|\n";
    for (const auto& [id, t] : tally)
        md += "| " + id + " | " + std::to_string(t[0]) + " | " + std::to_string(t[1]) +
              " | " + std::to_string(t[2]) + " |\n";

    std::string fails, skips;
    for (const auto& r : report["records"]) {
        const std::string v = r["verdict"].get<std::string>();
        if (v == "FAIL")
            fails += "- `" + r["claim"].get<std::string>() + "` " +
                     r["instance"].get<std::string>() + ": expected " + r["expected"].dump() +
                     ", computed " + r["computed"].dump() + "\n";
        else if (v == "SKIP")
            skips += "- `" + r["claim"].get<std::string>() + "` " +
                     r["instance"].get<std::string>() + ": " +
                     (r.contains("reason") ? r["reason"].get<std::string>() : "") + "\n";
    }
    if (!fails.empty()) md += "\n## Failing instances\n\n" + fails;
    if (!skips.empty()) md += "\n## Skipped instances\n\n" + skips;
    return md;
}

}  // namespace graphsym

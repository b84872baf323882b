#include "symmsum/verify.hpp"

#include "symmsum/errors.hpp"
#include "symmsum/identities.hpp"
#include "symmsum/random.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symmsum {

using nlohmann::json;

namespace {

using CaseCheck = std::function<std::vector<VerifyFailure>(std::uint64_t trial, Rng& rng)>;

/// Runs `check` once per trial, in parallel, collecting failures in trial order.
std::vector<VerifyFailure> run_trials(std::uint64_t trials, std::uint64_t seed, int threads, const CaseCheck& check) {
    std::vector<std::vector<VerifyFailure>> per_trial(trials);
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads)) if (threads > 1)
    for (std::int64_t t = 0; t < count; ++t) {
        const auto trial = static_cast<std::uint64_t>(t);
        Rng rng = trial_rng(seed, trial);
        per_trial[trial] = check(trial, rng);
    }
    std::vector<VerifyFailure> out;
    for (auto& f : per_trial) out.insert(out.end(), f.begin(), f.end());
    return out;
}

MatrixTuple<Rational> random_tuple(std::size_t n, std::size_t count, Rng& rng) {
    std::vector<Matrix<Rational>> members;
    members.reserve(count);
    for (std::size_t i = 0; i < count; ++i) members.push_back(random_integer_matrix(n, rng));
    return MatrixTuple<Rational>(std::move(members));
}

VerifyResult make_result(std::string identity, const VerifyOptions& o, std::size_t tuple_size,
                         std::optional<std::size_t> tau) {
    VerifyResult r;
    r.identity = std::move(identity);
    r.n = o.n;
    r.tuple_size = tuple_size;
    r.tau = tau;
    r.trials = o.trials;
    r.seed = o.seed;
    return r;
}

void require_n(const VerifyOptions& o) {
    if (o.n < 1) throw input_error("verify: n must be at least 1");
}

VerifyResult verify_theorem1(const VerifyOptions& o) {
    require_n(o);
    const std::size_t big_n = o.tuple_size.value_or(o.n + 1);
    auto r = make_result("theorem1", o, big_n, std::nullopt);
    r.failures = run_trials(o.trials, o.seed, o.threads, [&](std::uint64_t trial, Rng& rng) {
        const auto a = random_integer_matrix(o.n, rng);
        const auto s = random_tuple(o.n, big_n, rng);
        const auto res = theorem1_residual(a, s);
        std::vector<VerifyFailure> f;
        if (!res.is_zero()) f.push_back({trial, std::nullopt, to_string(res.value)});
        return f;
    });
    r.cases = o.trials;
    return r;
}

/// tau values to sweep: the requested one, or every tau in [lo, min(n, N-1)].
std::vector<std::size_t> tau_range(const VerifyOptions& o, std::size_t big_n, std::size_t lo) {
    if (o.tau) {
        if (*o.tau > o.n) throw input_error("verify: tau exceeds n");
        return {*o.tau};
    }
    std::vector<std::size_t> out;
    for (std::size_t t = lo; t <= std::min(o.n, big_n == 0 ? 0 : big_n - 1); ++t) out.push_back(t);
    return out;
}

std::vector<VerifyResult> verify_corollary(const VerifyOptions& o, bool submatrix_form) {
    require_n(o);
    const std::size_t big_n = o.tuple_size.value_or(o.n + 1);
    std::vector<VerifyResult> results;
    for (std::size_t tau : tau_range(o, big_n, 0)) {
        auto r = make_result(submatrix_form ? "corollary-sub" : "corollary-symm", o, big_n, tau);
        r.failures = run_trials(o.trials, o.seed, o.threads, [&](std::uint64_t trial, Rng& rng) {
            const auto a = random_integer_matrix(o.n, rng);
            const auto s = random_tuple(o.n, big_n, rng);
            Residual<Rational> res;
            if (submatrix_form) {
                const auto rows = random_index_set(o.n, tau, rng);
                const auto cols = random_index_set(o.n, tau, rng);
                res = submatrix_residual(a, s, rows, cols);
            } else {
                res = symm_residual(a, s, tau);
            }
            std::vector<VerifyFailure> f;
            if (!res.is_zero()) f.push_back({trial, tau, to_string(res.value)});
            return f;
        });
        r.cases = o.trials;
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<VerifyResult> verify_aux19(const VerifyOptions& o) {
    require_n(o);
    std::vector<std::size_t> taus;
    if (o.tau) {
        taus.push_back(*o.tau);
    } else {
        for (std::size_t t = 1; t <= o.n; ++t) {
            if (!o.tuple_size || *o.tuple_size >= t + 1) taus.push_back(t);
        }
    }
    std::vector<VerifyResult> results;
    for (std::size_t tau : taus) {
        if (tau > o.n) throw input_error("verify aux19: tau exceeds n");
        const std::size_t big_n = o.tuple_size.value_or(tau + 1);
        if (tau == 0 || big_n < tau + 1) {
            throw precondition_error("verify aux19: needs 1 <= tau and N >= tau + 1");
        }
        auto r = make_result("aux19", o, big_n, tau);
        r.failures = run_trials(o.trials, o.seed, o.threads, [&](std::uint64_t trial, Rng& rng) {
            const auto s = random_tuple(o.n, big_n, rng);
            Matrix<Rational> sum(o.n, o.n);
            for (const auto& m : s.members()) sum += m;
            const Rational lhs = symm_k(sum, tau);
            const Rational rhs = reconstruct_symm(s, tau);
            std::vector<VerifyFailure> f;
            if (lhs != rhs) f.push_back({trial, tau, to_string(lhs) + " != " + to_string(rhs)});
            return f;
        });
        r.cases = o.trials;
        results.push_back(std::move(r));
    }
    return results;
}

VerifyResult verify_closed_form(const std::string& name, const VerifyOptions& o) {
    require_n(o);
    const std::size_t order = name == "s2" ? 2 : name == "s4" ? 4 : 3;
    const std::size_t members = name == "s3x3" ? 3 : 2;
    auto r = make_result(name, o, members, order);
    r.failures = run_trials(o.trials, o.seed, o.threads, [&](std::uint64_t trial, Rng& rng) {
        const auto a = random_integer_matrix(o.n, rng);
        const auto b = random_integer_matrix(o.n, rng);
        Rational closed;
        Rational direct;
        if (name == "s2") {
            closed = s2_of_sum(a, b);
            direct = symm_k(Matrix<Rational>(a + b), 2);
        } else if (name == "s3") {
            closed = s3_of_sum(a, b);
            direct = symm_k(Matrix<Rational>(a + b), 3);
        } else if (name == "s4") {
            closed = s4_of_sum(a, b);
            direct = symm_k(Matrix<Rational>(a + b), 4);
        } else {
            const auto c = random_integer_matrix(o.n, rng);
            closed = s3_of_sum3(a, b, c);
            direct = symm_k(Matrix<Rational>(a + b + c), 3);
        }
        std::vector<VerifyFailure> f;
        if (closed != direct) f.push_back({trial, order, to_string(closed) + " != " + to_string(direct)});
        return f;
    });
    r.cases = o.trials;
    return r;
}

VerifyResult verify_optimality(const VerifyOptions& o) {
    require_n(o);
    std::vector<Rational> xs = o.xs;
    if (xs.empty()) xs = {Rational(0), Rational(1), Rational(-5), parse_rational("7/3"), Rational(1000000)};
    auto r = make_result("optimality", o, o.n, std::nullopt);
    r.trials = xs.size();
    const Rational expected(o.n % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto w = optimality_witness(o.n, xs[i], o.threads);
        if (w.residual.value != expected) {
            r.failures.push_back({i, std::nullopt, to_string(w.residual.value)});
        }
    }
    r.cases = xs.size();
    return r;
}

} // namespace

std::string VerifyResult::summary() const {
    std::ostringstream os;
    os << identity << " n=" << n << " N=" << tuple_size;
    if (tau) os << " tau=" << *tau;
    os << " trials=" << trials << " seed=" << seed << " cases=" << cases << " failures=" << failures.size() << ' '
       << (ok() ? "OK" : "FAIL");
    return os.str();
}

const std::vector<std::string>& verify_identity_names() {
    static const std::vector<std::string> names{"theorem1", "corollary-sub", "corollary-symm", "aux19", "s2",
                                                "s3",       "s3x3",          "s4",             "optimality"};
    return names;
}

std::vector<VerifyResult> verify_identity(const std::string& identity, const VerifyOptions& opts) {
    if (identity == "theorem1") return {verify_theorem1(opts)};
    if (identity == "corollary-sub") return verify_corollary(opts, true);
    if (identity == "corollary-symm") return verify_corollary(opts, false);
    if (identity == "aux19") return verify_aux19(opts);
    if (identity == "s2" || identity == "s3" || identity == "s3x3" || identity == "s4") {
        return {verify_closed_form(identity, opts)};
    }
    if (identity == "optimality") return {verify_optimality(opts)};
    throw input_error("unknown identity '" + identity + "'");
}

std::vector<VerifyResult> verify_all(std::uint64_t trials, std::uint64_t seed, int threads) {
    std::vector<VerifyResult> out;
    auto append = [&](std::vector<VerifyResult> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    VerifyOptions o;
    o.trials = trials;
    o.seed = seed;
    o.threads = threads;

    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t big_n : {n + 1, n + 2}) {
            o.n = n;
            o.tuple_size = big_n;
            append(verify_identity("theorem1", o));
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        o.n = n;
        o.tuple_size = n + 1;
        append(verify_identity("corollary-sub", o));
        append(verify_identity("corollary-symm", o));
    }
    const std::pair<std::size_t, std::size_t> aux19_cases[] = {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}};
    for (auto [tau, big_n] : aux19_cases) {
        o.n = std::max<std::size_t>(tau, 3);
        o.tau = tau;
        o.tuple_size = big_n;
        append(verify_identity("aux19", o));
    }
    o.tau.reset();
    o.tuple_size.reset();
    const std::pair<const char*, std::size_t> closed_forms[] = {{"s2", 2}, {"s3", 3}, {"s3x3", 3}, {"s4", 4}};
    for (auto [name, k] : closed_forms) {
        for (std::size_t n = k; n <= k + 2; ++n) {
            o.n = n;
            append(verify_identity(name, o));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        o.n = n;
        append(verify_identity("optimality", o));
    }
    return out;
}

json verify_results_to_json(const std::vector<VerifyResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json failures = json::array();
        for (const auto& f : r.failures) {
            failures.push_back({{"trial", f.trial}, {"tau", f.tau ? json(*f.tau) : json(nullptr)}, {"value", f.value}});
        }
        arr.push_back({{"identity", r.identity},
                       {"n", r.n},
                       {"N", r.tuple_size},
                       {"tau", r.tau ? json(*r.tau) : json(nullptr)},
                       {"trials", r.trials},
                       {"seed", r.seed},
                       {"cases", r.cases},
                       {"failures", std::move(failures)},
                       {"ok", r.ok()}});
    }
    return json{{"results", std::move(arr)}};
}

std::vector<VerifyResult> verify_results_from_json(const json& j) {
    auto opt_size = [](const json& v) -> std::optional<std::size_t> {
        if (v.is_null()) return std::nullopt;
        return v.get<std::size_t>();
    };
    try {
        std::vector<VerifyResult> out;
        for (const auto& x : j.at("results")) {
            VerifyResult r;
            r.identity = x.at("identity").get<std::string>();
            r.n = x.at("n").get<std::size_t>();
            r.tuple_size = x.at("N").get<std::size_t>();
            r.tau = opt_size(x.at("tau"));
            r.trials = x.at("trials").get<std::uint64_t>();
            r.seed = x.at("seed").get<std::uint64_t>();
            r.cases = x.at("cases").get<std::uint64_t>();
            for (const auto& f : x.at("failures")) {
                r.failures.push_back(
                    {f.at("trial").get<std::uint64_t>(), opt_size(f.at("tau")), f.at("value").get<std::string>()});
            }
            out.push_back(std::move(r));
        }
        return out;
    } catch (const json::exception& e) {
        throw input_error(std::string("verify report JSON: ") + e.what());
    }
}

} // namespace symmsum

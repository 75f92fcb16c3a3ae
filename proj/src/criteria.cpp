#include "hypalg/criteria.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

namespace hypalg {

namespace {

unsigned long common_denominator(const std::vector<Rational>& xs,
                                 const std::vector<Rational>& ys) {
    Integer n = 1;
    for (const auto& x : xs) n = lcm(n, den(x));
    for (const auto& y : ys) n = lcm(n, den(y));
    if (n > 100000000)
        throw Error("least common denominator too large for the sweep: " +
                    n.str());
    return n.convert_to<unsigned long>();
}

std::vector<unsigned long> units_mod(unsigned long n) {
    std::vector<unsigned long> units;
    for (unsigned long l = 1; l <= n; ++l)
        if (std::gcd(l, n) == 1) units.push_back(l);
    return units;
}

std::vector<std::pair<Rational, BracketValue>>
scaled_sorted_by_bracket(const std::vector<Rational>& xs, unsigned long l) {
    std::vector<std::pair<Rational, BracketValue>> out;
    out.reserve(xs.size());
    Rational lam{Integer(l)};
    for (const auto& x : xs) {
        Rational v = lam * x;
        out.emplace_back(v, bracket(v));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.value != b.second.value)
            return a.second.value < b.second.value;
        return a.first > b.first; // bracket-order tie rule
    });
    return out;
}

// Runs body(i) for i in [0, count), optionally on a few threads. Results
// must be written to independent slots so the output is deterministic.
void sweep(std::size_t count, bool parallel,
           const std::function<void(std::size_t)>& body) {
    if (!parallel || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    std::size_t nthreads = std::min<std::size_t>(hw, count);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < nthreads; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) body(i);
        });
    for (auto& th : threads) th.join();
}

} // namespace

bool interlaces(const std::vector<Rational>& top,
                const std::vector<Rational>& bottom) {
    if (top.size() != bottom.size()) return false;
    if (top.empty()) return true;
    std::vector<Rational> a, b;
    a.reserve(top.size());
    b.reserve(bottom.size());
    for (const auto& x : top) a.push_back(bracket(x).value);
    for (const auto& x : bottom) b.push_back(bracket(x).value);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Rational prev = a[0];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) {
            if (!(prev < a[i])) return false;
            prev = a[i];
        }
        if (!(prev < b[i])) return false;
        prev = b[i];
    }
    return true;
}

CriterionReport ic_check(const std::vector<Rational>& top,
                         const std::vector<Rational>& bottom,
                         const CriteriaOptions& options) {
    CriterionReport report;
    report.modulus = common_denominator(top, bottom);
    auto units = units_mod(report.modulus);
    report.per_lambda.resize(units.size());

    bool size_mismatch = top.size() != bottom.size();
    sweep(units.size(), options.parallel, [&](std::size_t i) {
        unsigned long l = units[i];
        LambdaReport& lr = report.per_lambda[i];
        lr.lambda = l;
        lr.sorted_top = scaled_sorted_by_bracket(top, l);
        lr.sorted_bottom = scaled_sorted_by_bracket(bottom, l);
        if (size_mismatch) {
            lr.satisfied = false;
            lr.failure_witness = "multiset sizes differ (" +
                                 std::to_string(top.size()) + " vs " +
                                 std::to_string(bottom.size()) + ")";
            return;
        }
        // Re-check strict alternation on the sorted brackets, recording the
        // first violated inequality.
        lr.satisfied = true;
        Rational prev;
        bool have_prev = false;
        std::string prev_desc;
        for (std::size_t k = 0; k < lr.sorted_top.size() && lr.satisfied;
             ++k) {
            const Rational& ta = lr.sorted_top[k].second.value;
            if (have_prev && !(prev < ta)) {
                lr.satisfied = false;
                lr.failure_witness = "<" + to_pretty_string(ta) +
                                     "> (top) does not exceed " + prev_desc;
                break;
            }
            prev = ta;
            prev_desc = "<" + to_pretty_string(ta) + "> (top)";
            have_prev = true;
            const Rational& tb = lr.sorted_bottom[k].second.value;
            if (!(prev < tb)) {
                lr.satisfied = false;
                lr.failure_witness = "<" + to_pretty_string(tb) +
                                     "> (bottom) does not exceed " + prev_desc;
                break;
            }
            prev = tb;
            prev_desc = "<" + to_pretty_string(tb) + "> (bottom)";
        }
    });

    report.satisfied = !size_mismatch;
    for (const auto& lr : report.per_lambda)
        report.satisfied = report.satisfied && lr.satisfied;
    if (size_mismatch)
        report.witness = "top and bottom multisets are not equinumerous";
    else if (!report.satisfied) {
        for (const auto& lr : report.per_lambda)
            if (!lr.satisfied) {
                report.witness = "fails at lambda = " +
                                 std::to_string(lr.lambda) + ": " +
                                 lr.failure_witness.value_or("");
                break;
            }
    }
    return report;
}

CriterionReport christol_globally_bounded(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b,
                                          const CriteriaOptions& options) {
    if (a.size() != b.size() + 1)
        throw Error("christol_globally_bounded expects p = q+1 parameters");
    for (const auto& x : a)
        if (is_nonpositive_integer(x))
            throw Error("christol_globally_bounded: top parameter in -N");
    for (const auto& x : b)
        if (is_nonpositive_integer(x))
            throw Error("christol_globally_bounded: bottom parameter in -N");

    std::vector<Rational> bb = b;
    bb.emplace_back(1); // b_p = 1

    CriterionReport report;
    report.modulus = common_denominator(a, bb);
    auto units = units_mod(report.modulus);
    report.per_lambda.resize(units.size());

    sweep(units.size(), options.parallel, [&](std::size_t i) {
        unsigned long l = units[i];
        LambdaReport& lr = report.per_lambda[i];
        lr.lambda = l;
        Rational lam{Integer(l)};
        std::vector<Rational> la, lb;
        for (const auto& x : a) la.push_back(lam * x);
        for (const auto& x : bb) lb.push_back(lam * x);
        lr.satisfied = true;
        for (std::size_t k = 0; k < lb.size(); ++k) {
            long top_count = 0, bottom_count = 0;
            for (const auto& v : la)
                if (prec_leq(v, lb[k])) ++top_count;
            for (const auto& v : lb)
                if (prec_leq(v, lb[k])) ++bottom_count;
            if (top_count - bottom_count < 0) {
                lr.satisfied = false;
                lr.failure_witness =
                    "k = " + std::to_string(k + 1) + " (b = " +
                    to_pretty_string(bb[k]) + "): counts " +
                    std::to_string(top_count) + " - " +
                    std::to_string(bottom_count) + " < 0";
                break;
            }
        }
        // scaled_sorted_by_bracket already sorts by the full order.
        lr.sorted_top = scaled_sorted_by_bracket(a, l);
        lr.sorted_bottom = scaled_sorted_by_bracket(bb, l);
    });

    report.satisfied = true;
    for (const auto& lr : report.per_lambda)
        report.satisfied = report.satisfied && lr.satisfied;
    if (!report.satisfied) {
        for (const auto& lr : report.per_lambda)
            if (!lr.satisfied) {
                report.witness = "fails at lambda = " +
                                 std::to_string(lr.lambda) + ", " +
                                 lr.failure_witness.value_or("");
                break;
            }
    }
    return report;
}

} // namespace hypalg

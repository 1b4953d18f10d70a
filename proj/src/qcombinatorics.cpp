#include "qweyl/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qweyl {

Scalar q_number(long long x, const QExp& di) {
    // [x] = q^(x-1) + q^(x-3) + ... + q^(1-x) for x > 0, odd under x -> -x.
    if (x == 0) return Scalar();
    long long ax = x > 0 ? x : -x;
    QLaurent p;
    for (long long t = 0; t < ax; ++t)
        p = p + QLaurent::qpow(di * (ax - 1 - 2 * t));
    Scalar s(p);
    return x > 0 ? s : -s;
}

Scalar q_factorial(long long n, const QExp& di) {
    if (n < 0) throw Error("q_factorial: negative argument");
    Scalar acc(1);
    for (long long k = 1; k <= n; ++k) acc *= q_number(k, di);
    return acc;
}

namespace {
using BinomKey = std::tuple<long long, long long, long long, long long>;
std::map<BinomKey, Scalar> g_binom_cache; // guarded by g_binom_mutex
std::mutex g_binom_mutex;
} // namespace

Scalar q_binom(long long n, long long k, const QExp& di) {
    if (k < 0) throw Error("q_binom: negative lower index");
    if (k == 0) return Scalar(1);
    BinomKey key{n, k, di.num(), di.den()};
    {
        std::lock_guard<std::mutex> lock(g_binom_mutex);
        auto it = g_binom_cache.find(key);
        if (it != g_binom_cache.end()) return it->second;
    }
    Scalar num(1);
    for (long long t = 0; t < k; ++t) num *= q_number(n - t, di);
    Scalar value = num / q_factorial(k, di);
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    return g_binom_cache.emplace(key, std::move(value)).first->second;
}

XLaurent q_bracket_shifted(long long v, const QExp& di) {
    // (x q^v - x^-1 q^-v)/(q - q^-1), all in the q_i variable.
    Scalar den = Scalar::qpow(di) - Scalar::qpow(-di);
    XLaurent r = XLaurent::xpow(1, Scalar::qpow(di * v) / den);
    r = r - XLaurent::xpow(-1, Scalar::qpow(-(di * v)) / den);
    return r;
}

SymbolicQBinom q_binom_symbolic(long long k, const QExp& di) {
    if (k < 0) throw Error("q_binom_symbolic: negative index");
    SymbolicQBinom out;
    out.k = k;
    XLaurent acc{Scalar(1)};
    for (long long v = 0; v < k; ++v) acc = acc * q_bracket_shifted(-v, di);
    out.value = acc / q_factorial(k, di);
    return out;
}

std::pair<XLaurent, XLaurent> q_pochhammer_ratio(long long n, const QExp& di) {
    XLaurent one{Scalar(1)};
    XLaurent num = one, den = one;
    if (n >= 0) {
        for (long long v = 0; v < n; ++v)
            num = num * (one + XLaurent::xpow(1, Scalar::qpow(di * (2 * (v - n)))));
    } else {
        for (long long v = 0; v < -n; ++v)
            den = den * (one + XLaurent::xpow(1, Scalar::qpow(di * (2 * v))));
    }
    return {num, den};
}

XLaurent q_pochhammer(long long k, const QExp& di) {
    XLaurent one{Scalar(1)};
    XLaurent acc = one;
    for (long long v = 0; v < k; ++v)
        acc = acc * (one + XLaurent::xpow(1, Scalar::qpow(di * (2 * v))));
    return acc;
}

} // namespace qweyl

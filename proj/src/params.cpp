#include "srg/params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace srg {

namespace {

long long discriminant(const SrgParams& p) {
    long long d = p.lambda - p.mu;
    return d * d + 4 * (p.k - p.mu);
}

bool conference_form(const SrgParams& p, long long& t) {
    t = p.mu;
    return t >= 1 && p.v == 4 * t + 1 && p.k == 2 * t && p.lambda == t - 1;
}

bool is_primitive(const SrgParams& p) { return p.mu >= 1 && p.mu <= p.k - 1; }

}  // namespace

double Spectrum::lambda2() const { return std::max(r.value(), -s.value()); }

const char* family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::CompleteMultipartite: return "complete_multipartite";
        case FamilyTag::Conference: return "conference";
        case FamilyTag::LatinSquareType: return "latin_square";
        case FamilyTag::SteinerType: return "steiner";
        case FamilyTag::ExceptionalType: return "exceptional";
    }
    return "?";
}

const FeasibilityCheck* FeasibilityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

Spectrum spectrum_from_params(const SrgParams& p) {
    const long long D = discriminant(p);
    if (D < 0) throw NonIntegralMultiplicity("negative discriminant");
    const long long lm = p.lambda - p.mu;

    long long rt = 0;
    Spectrum sp;
    sp.k = p.k;
    if (perfect_square(D, rt)) {
        // rt and lm share parity: D == lm^2 (mod 2).
        const long long r2 = lm + rt, s2 = lm - rt;
        if ((r2 & 1) || (s2 & 1)) throw NonIntegralMultiplicity("half-integral eigenvalue");
        const long long r = r2 / 2, s = s2 / 2;
        if (r == s) throw NonIntegralMultiplicity("coincident eigenvalues");
        const long long num = -p.k - (p.v - 1) * s;
        const long long den = r - s;
        if (num % den != 0) throw NonIntegralMultiplicity("non-integral multiplicity");
        sp.r = ExactEig::integer(r);
        sp.s = ExactEig::integer(s);
        sp.f = num / den;
        sp.g = p.v - 1 - sp.f;
        if (sp.f < 1 || sp.g < 1) throw NonIntegralMultiplicity("multiplicity out of range");
    } else {
        long long t = 0;
        if (!conference_form(p, t))
            throw NonIntegralMultiplicity("irrational spectrum outside conference form");
        sp.r = ExactEig::surd(-1, 1, D);   // (sqrt(4t+1) - 1) / 2
        sp.s = ExactEig::surd(-1, -1, D);  // (-sqrt(4t+1) - 1) / 2
        sp.f = sp.g = (p.v - 1) / 2;
        sp.conference = true;
    }
    return sp;
}

FeasibilityReport check_feasibility(const SrgParams& p) {
    FeasibilityReport rep;
    rep.p = p;
    auto add = [&rep](std::string name, bool applicable, bool pass) {
        rep.checks.push_back({std::move(name), applicable, applicable ? pass : true});
    };

    const bool range_ok = p.v >= 3 && p.k > 0 && p.k < p.v - 1 && p.lambda >= 0 &&
                          p.mu >= 0 && p.lambda <= p.k - 1 && p.mu <= p.k;
    add("parameter_range", true, range_ok);

    bool identity_ok = false;
    if (range_ok) {
        identity_ok = p.k * (p.k - 1 - p.lambda) == p.mu * (p.v - p.k - 1);
        add("degree_identity", true, identity_ok);
    } else {
        add("degree_identity", false, true);
    }

    bool have_spectrum = false;
    Spectrum sp;
    if (range_ok && identity_ok) {
        try {
            sp = spectrum_from_params(p);
            have_spectrum = true;
        } catch (const NonIntegralMultiplicity&) {
        }
        add("multiplicity_integrality", true, have_spectrum);
    } else {
        add("multiplicity_integrality", false, true);
    }

    bool eig_ok = false;
    if (have_spectrum) {
        // r > 0 > -1 > s, with r = 0 only in the complete multipartite case.
        const bool s_ok = sp.conference || sp.s.as_integer() < -1;
        const bool r_ok = sp.conference || (p.mu == p.k ? sp.r.as_integer() == 0
                                                        : sp.r.as_integer() > 0);
        eig_ok = s_ok && r_ok;
        add("eigenvalue_range", true, eig_ok);
    } else {
        add("eigenvalue_range", false, true);
    }

    const bool primitive = range_ok && is_primitive(p);
    if (have_spectrum && eig_ok && primitive) {
        add("seidel_f", true, p.v <= sp.f * (sp.f + 3) / 2);
        add("seidel_g", true, p.v <= sp.g * (sp.g + 3) / 2);
    } else {
        add("seidel_f", false, true);
        add("seidel_g", false, true);
    }

    if (range_ok && identity_ok) {
        const long long cv = p.v, ck = p.v - p.k - 1;
        const long long cl = p.v - 2 * p.k + p.mu - 2, cm = p.v - 2 * p.k + p.lambda;
        const bool comp_ok = ck > 0 && ck < cv - 1 && cl >= 0 && cm >= 0 &&
                             cl <= ck - 1 && cm <= ck &&
                             ck * (ck - 1 - cl) == cm * (cv - ck - 1);
        add("complement_validity", true, comp_ok);
    } else {
        add("complement_validity", false, true);
    }

    rep.feasible = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const FeasibilityCheck& c) { return c.pass; });
    return rep;
}

ParamClass classify_params(const SrgParams& p) {
    const Spectrum sp = spectrum_from_params(p);
    ParamClass cls;
    cls.primitive = is_primitive(p);

    if (p.mu == p.k) {
        cls.tag = FamilyTag::CompleteMultipartite;
        cls.m = -sp.s.as_integer();
        cls.n = p.v / cls.m;
        return cls;
    }
    long long t = 0;
    if (conference_form(p, t) && sp.conference) {
        cls.tag = FamilyTag::Conference;
        cls.t = t;
        return cls;
    }
    if (sp.integral()) {
        const long long m = -sp.s.as_integer();
        const long long r = sp.r.as_integer();
        long long n = 0;
        if (m >= 2 && perfect_square(p.v, n) && n >= 2 && p.k == m * (n - 1) &&
            r == n - m) {
            cls.tag = FamilyTag::LatinSquareType;
            cls.m = m;
            cls.n = n;
            return cls;
        }
        if (m >= 2 && p.k % m == 0) {
            // k = m((n-1)/(m-1) - 1)  =>  n = (m-1)(k/m + 1) + 1
            const long long nn = (m - 1) * (p.k / m + 1) + 1;
            const long long denom = m * (m - 1);
            if (nn >= 2 && nn * (nn - 1) % denom == 0 &&
                p.v == nn * (nn - 1) / denom && r == (nn - 1) / (m - 1) - m - 1) {
                cls.tag = FamilyTag::SteinerType;
                cls.m = m;
                cls.n = nn;
                return cls;
            }
        }
    }
    cls.tag = FamilyTag::ExceptionalType;
    return cls;
}

SrgParams complement_params(const SrgParams& p) {
    SrgParams q{p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda};
    if (q.k <= 0 || q.k >= q.v - 1)
        throw ComplementDegenerate("complement is complete or empty");
    return q;
}

BoundReport bound_suite(const SrgParams& p) {
    const Spectrum sp = spectrum_from_params(p);
    const ParamClass cls = classify_params(p);
    const bool primitive = cls.primitive;
    const bool pseudo_random_class =
        cls.tag == FamilyTag::ExceptionalType || cls.tag == FamilyTag::Conference;

    const double k = static_cast<double>(p.k);
    const double v = static_cast<double>(p.v);
    const double r = sp.r.value();
    const double mag_s = -sp.s.value();
    const double lam2 = sp.lambda2();

    BoundReport rep;
    rep.p = p;
    auto add = [&rep](std::string name, bool applicable, double lhs, double rhs,
                      bool satisfied) {
        rep.entries.push_back({std::move(name), lhs, rhs, applicable ? satisfied : false,
                               applicable});
    };

    add("seidel_f", primitive, static_cast<double>(p.v),
        static_cast<double>(sp.f * (sp.f + 3)) / 2.0, p.v <= sp.f * (sp.f + 3) / 2);
    add("seidel_g", primitive, static_cast<double>(p.v),
        static_cast<double>(sp.g * (sp.g + 3)) / 2.0, p.v <= sp.g * (sp.g + 3) / 2);

    // k / Lambda > sqrt(k / sqrt(v))  <=>  Lambda^4 < v k^2.
    {
        bool ok;
        if (sp.integral()) {
            const __int128 L = std::llabs(std::max(sp.r.as_integer(), -sp.s.as_integer()));
            ok = L * L * L * L < static_cast<__int128>(p.v) * p.k * p.k;
        } else {
            ok = lam2 * lam2 * lam2 * lam2 < v * k * k;
        }
        add("primitive_ratio_bound", primitive, k / lam2, std::sqrt(k / std::sqrt(v)), ok);
    }

    // |lambda - mu| < v^{3/4}  <=>  (lambda - mu)^4 < v^3.
    {
        const long long d = std::llabs(p.lambda - p.mu);
        const bool ok = static_cast<__int128>(d) * d * d * d <
                        static_cast<__int128>(p.v) * p.v * p.v;
        add("lambda_mu_gap", primitive, static_cast<double>(d), std::pow(v, 0.75), ok);
    }

    // k / |s| > v^{1/6} / 2  <=>  (2k)^6 > v |s|^6.
    {
        bool ok;
        if (sp.integral()) {
            const __int128 kk = 2 * p.k, ss = -sp.s.as_integer();
            ok = kk * kk * kk * kk * kk * kk >
                 static_cast<__int128>(p.v) * ss * ss * ss * ss * ss * ss;
        } else {
            ok = k / mag_s > std::pow(v, 1.0 / 6.0) / 2.0;
        }
        add("k_over_s_bound", primitive, k / mag_s, std::pow(v, 1.0 / 6.0) / 2.0, ok);
    }

    // Neumaier claw bound r <= m(m+1)(mu+1)/2 - 1 with m = -s, integral s only.
    {
        const bool applicable = cls.tag == FamilyTag::ExceptionalType && sp.integral();
        bool ok = true;
        double rhs = 0;
        if (applicable) {
            const long long m = -sp.s.as_integer();
            const long long bound2 = m * (m + 1) * (p.mu + 1) - 2;  // 2*(rhs)
            ok = 2 * sp.r.as_integer() <= bound2;
            rhs = static_cast<double>(bound2) / 2.0;
        }
        add("neumaier_claw", applicable, r, rhs, ok);
    }

    add("k_over_r_bound", pseudo_random_class, k / r, std::pow(v, 0.1),
        k / r > std::pow(v, 0.1));
    add("pseudorandom_ratio", pseudo_random_class, k / lam2, std::pow(v, 0.1) / 2.0,
        k / lam2 > std::pow(v, 0.1) / 2.0);

    rep.all_ok = std::all_of(rep.entries.begin(), rep.entries.end(),
                             [](const BoundEntry& e) { return !e.applicable || e.satisfied; });
    return rep;
}

double ks_threshold(long long v) {
    if (v < 16) throw ThresholdUndefined("ks_threshold requires v >= 16");
    const double lv = std::log(static_cast<double>(v));
    const double llv = std::log(lv);
    return 1000.0 * lv * std::log(llv) / (llv * llv);
}

void enumerate_feasible(long long v_max,
                        const std::function<void(const FeasibleEntry&)>& sink) {
    for (long long v = 4; v <= v_max; ++v) {
        for (long long k = 1; k <= v - 2; ++k) {
            const long long d = v - k - 1;
            const long long step = d / std::gcd(k, d);
            // mu = k(k-1-lambda)/d integral forces lambda == k-1 (mod step);
            // mu <= k forces lambda >= k-1-d.
            long long lo = std::max<long long>(0, k - 1 - d);
            lo += (k - 1 - lo) % step;
            for (long long lambda = lo; lambda <= k - 1; lambda += step) {
                const SrgParams p{v, k, lambda, k * (k - 1 - lambda) / d};
                const auto rep = check_feasibility(p);
                if (!rep.feasible) continue;
                FeasibleEntry e;
                e.p = p;
                e.spectrum = spectrum_from_params(p);
                e.cls = classify_params(p);
                e.bounds = bound_suite(p);
                sink(e);
            }
        }
    }
}

std::vector<FeasibleEntry> enumerate_feasible(long long v_max) {
    std::vector<FeasibleEntry> out;
    enumerate_feasible(v_max, [&out](const FeasibleEntry& e) { out.push_back(e); });
    return out;
}

}  // namespace srg

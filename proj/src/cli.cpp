#include "symdisc/cli.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "symdisc/oracle.hpp"

namespace symdisc {

using json = nlohmann::ordered_json;

namespace {

SymmetricForm form_from_spec(const JobSpec& spec, unsigned degree) {
    SymmetricForm form;
    form.n = spec.n;
    form.r = degree;
    for (const auto& [key, val] : spec.coefficients) {
        Partition y = Partition::parse(key);
        if (y.weight() != degree)
            throw ParseError("partition '" + key + "' has weight " +
                             std::to_string(y.weight()) + ", expected " +
                             std::to_string(degree));
        form.coeffs[y] = parse_rational(val);
    }
    return form;
}

json spec_to_json(const JobSpec& spec) {
    json j;
    j["command"] = spec.command;
    j["n"] = spec.n;
    j["r"] = spec.r;
    j["coefficients"] = json::object();
    for (const auto& [k, v] : spec.coefficients) j["coefficients"][k] = v;
    j["symbolic"] = spec.symbolic;
    j["format"] = spec.format;
    j["seed"] = spec.seed;
    j["trials"] = spec.trials;
    j["variant"] = spec.variant;
    return j;
}

json factored_to_json(const FactoredDiscriminant& d) {
    json j;
    j["regime_flag"] = d.unproven_regime ? "unproven" : "proven";
    j["zero"] = d.zero;
    if (d.zero) {
        j["value"] = "0";
        return j;
    }
    j["alpha"] = to_string(d.alpha);
    j["cr_exponent"] = d.cr_exponent;
    j["total_degree"] = d.total_degree().get_str();
    auto names = coefficient_names(d.r);
    j["factors"] = json::array();
    for (const auto& f : d.factors) {
        json jf;
        jf["class"] = {{"nonzero_parts", f.cls.nonzero_parts}, {"zeros", f.cls.zeros}};
        jf["poly"] = f.poly.str(names);
        jf["exponent"] = f.exponent;
        if (f.value) jf["value"] = to_string(*f.value);
        j["factors"].push_back(std::move(jf));
    }
    if (d.value) j["value"] = to_string(*d.value);
    return j;
}

void factored_to_text(const FactoredDiscriminant& d, std::ostream& out) {
    out << "regime: " << (d.unproven_regime ? "unproven" : "proven") << "\n";
    if (d.zero) {
        out << "value: 0\n";
        return;
    }
    auto names = coefficient_names(d.r);
    out << "alpha: " << to_string(d.alpha) << "\n";
    out << names[0] << "^" << d.cr_exponent << "\n";
    for (const auto& f : d.factors) {
        out << "(" << f.poly.str(names) << ")^" << f.exponent;
        if (f.value) out << "  [= " << to_string(*f.value) << "]";
        out << "\n";
    }
    out << "total degree: " << d.total_degree().get_str() << "\n";
    if (d.value) out << "value: " << to_string(*d.value) << "\n";
}

void emit(const JobSpec& spec, const FactoredDiscriminant& d, std::ostream& out) {
    if (spec.format == "json") {
        json j = factored_to_json(d);
        j["spec"] = spec_to_json(spec);
        out << j.dump(2) << "\n";
    } else {
        factored_to_text(d, out);
    }
}

// Deterministic small rationals for verification campaigns; avoids the
// implementation-defined std::uniform_int_distribution.
struct RationalSampler {
    unsigned long long state;
    explicit RationalSampler(unsigned long seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
    unsigned long long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
    Rational sample() {
        long num = static_cast<long>(next() % 19) - 9;
        unsigned long den = next() % 9 + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational sample_nonzero() {
        Rational q = sample();
        while (q == 0) q = sample();
        return q;
    }
};

int run_verify(const JobSpec& spec, std::ostream& out) {
    if (spec.n < 2) throw DomainError("verification needs n >= 2");
    std::string oracle_name;
    if (spec.n == 2)
        oracle_name = "sylvester";
    else if (spec.n == 3 && spec.r == 3)
        oracle_name = "hessian";
    else if (spec.n <= 4)
        oracle_name = "macaulay";
    else
        throw DomainError("no oracle covers n = " + std::to_string(spec.n));
    auto partitions = enumerate_partitions(spec.r);
    RationalSampler rng(spec.seed);
    unsigned agree = 0;
    for (unsigned t = 0; t < spec.trials; ++t) {
        SymmetricForm form;
        form.n = spec.n;
        form.r = spec.r;
        for (size_t i = 0; i < partitions.size(); ++i)
            form.coeffs[partitions[i]] = i == 0 ? rng.sample_nonzero() : rng.sample();
        Rational engine = *discriminant(form, spec.threads).value;
        Rational reference;
        MultiPoly s = expand(form);
        if (oracle_name == "sylvester")
            reference = sylvester_disc_2var(s).constant_value();
        else if (oracle_name == "hessian")
            reference = hessian_disc_3var(GenericCubic3::from_poly(s));
        else
            reference = gradient_macaulay_disc(s);
        if (engine == reference) ++agree;
    }
    if (spec.format == "json") {
        json j;
        j["oracle"] = oracle_name;
        j["agree"] = agree;
        j["trials"] = spec.trials;
        j["spec"] = spec_to_json(spec);
        out << j.dump(2) << "\n";
    } else {
        out << "engine == " << oracle_name << "-oracle at " << agree << "/"
            << spec.trials << " points\n";
    }
    return agree == spec.trials ? 0 : 3;
}

int run_impl(const JobSpec& spec, std::ostream& out) {
    if (spec.command == "discriminant") {
        if (spec.symbolic) {
            emit(spec, discriminant_symbolic(spec.n, spec.r, spec.threads), out);
        } else {
            emit(spec, discriminant(form_from_spec(spec, spec.r), spec.threads), out);
        }
        return 0;
    }
    if (spec.command == "closed-form") {
        FactoredDiscriminant d;
        if (spec.r == 2) {
            d = closed_form_r2(spec.n);
        } else if (spec.r == 3) {
            if (spec.variant != "product" && spec.variant != "b-form")
                throw ParseError("unknown variant '" + spec.variant + "'");
            d = closed_form_r3(spec.n, spec.variant == "b-form" ? R3Variant::b_form
                                                                : R3Variant::product);
        } else {
            throw DomainError("closed forms exist for r = 2 and r = 3");
        }
        if (!spec.coefficients.empty())
            d.value = evaluate(d, [&] {
                auto form = form_from_spec(spec, spec.r);
                std::vector<Rational> cv;
                for (const auto& y : enumerate_partitions(spec.r)) cv.push_back(form.coeff(y));
                return cv;
            }());
        emit(spec, d, out);
        return 0;
    }
    if (spec.command == "evaluate") {
        auto d = discriminant(form_from_spec(spec, spec.r), spec.threads);
        if (spec.format == "json") {
            json j;
            j["value"] = to_string(*d.value);
            j["spec"] = spec_to_json(spec);
            out << j.dump(2) << "\n";
        } else {
            out << to_string(*d.value) << "\n";
        }
        return 0;
    }
    if (spec.command == "verify") return run_verify(spec, out);
    if (spec.command == "antisym") {
        AntisymResult res;
        if (spec.n > 2) {
            res = antisymmetric_discriminant(spec.n, spec.r, nullptr);
        } else {
            SymmetricForm stilde = form_from_spec(spec, spec.r - 1);
            res = antisymmetric_discriminant(spec.n, spec.r, &stilde);
        }
        if (spec.format == "json") {
            json j;
            j["value"] = to_string(res.value);
            j["code"] = res.code;
            j["spec"] = spec_to_json(spec);
            out << j.dump(2) << "\n";
        } else {
            out << to_string(res.value) << "  (" << res.code << ")\n";
        }
        return 0;
    }
    if (spec.command == "berwald-moor") {
        Rational v = berwald_moor_check();
        if (spec.format == "json") {
            json j;
            j["value"] = to_string(v);
            j["identically_zero"] = true;
            j["spec"] = spec_to_json(spec);
            out << j.dump(2) << "\n";
        } else {
            out << "identically zero in (u, v); value: " << to_string(v) << "\n";
        }
        return 0;
    }
    throw ParseError("unknown command '" + spec.command + "'");
}

} // namespace

JobSpec job_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON input: ") + e.what());
    }
    // Accept both a plain spec object and a previously emitted result
    // document, which embeds its spec.
    if (j.contains("spec")) j = j["spec"];
    JobSpec spec;
    try {
        spec.command = j.at("command").get<std::string>();
        if (j.contains("n")) spec.n = j["n"].get<unsigned>();
        if (j.contains("r")) spec.r = j["r"].get<unsigned>();
        if (j.contains("coefficients"))
            for (auto& [k, v] : j["coefficients"].items())
                spec.coefficients[k] = v.get<std::string>();
        if (j.contains("symbolic")) spec.symbolic = j["symbolic"].get<bool>();
        if (j.contains("format")) spec.format = j["format"].get<std::string>();
        if (j.contains("seed")) spec.seed = j["seed"].get<unsigned long>();
        if (j.contains("trials")) spec.trials = j["trials"].get<unsigned>();
        if (j.contains("threads")) spec.threads = j["threads"].get<unsigned>();
        if (j.contains("variant")) spec.variant = j["variant"].get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad job spec: ") + e.what());
    }
    return spec;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.format != "text" && spec.format != "json")
            throw ParseError("unknown format '" + spec.format + "'");
        return run_impl(spec, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "Internal: " << e.what() << "\n";
        return 3;
    }
}

} // namespace symdisc

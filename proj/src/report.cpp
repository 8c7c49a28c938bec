#include "chemobound/report.hpp"

#include <cstdio>

namespace chemobound {

std::string JsonWriter::format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::newline() {
    os_ << '\n';
    for (int i = 0; i < depth_; ++i) os_ << "  ";
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) os_ << ',';
        needs_comma_.back() = true;
        newline();
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    os_ << '{';
    needs_comma_.push_back(false);
    ++depth_;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    --depth_;
    if (needs_comma_.back()) newline();
    needs_comma_.pop_back();
    os_ << '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    os_ << '[';
    needs_comma_.push_back(false);
    ++depth_;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    --depth_;
    if (needs_comma_.back()) newline();
    needs_comma_.pop_back();
    os_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separator();
    os_ << '"' << k << "\": ";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    os_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    os_ << '"';
    for (char ch : v) {
        if (ch == '"' || ch == '\\') os_ << '\\';
        os_ << ch;
    }
    os_ << '"';
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    os_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    os_ << v;
    return *this;
}

JsonWriter& JsonWriter::value_null() {
    separator();
    os_ << "null";
    return *this;
}

namespace {

void write_spec_block(JsonWriter& j, const Problem& p) {
    j.begin_object();
    j.kv("n", static_cast<long long>(p.geom.dim));
    j.kv("shape", p.geom.shape_name());
    j.kv("R", p.geom.radius);
    j.kv("measure", p.geom.measure());
    j.kv("m1", p.m1);
    j.kv("m2", p.m2);
    j.kv("alpha", p.alpha);
    j.kv("chi", p.chi);
    j.kv("M", p.mass_mean);
    j.kv("p0", p.p0);
    j.kv("q1", p.q1);
    j.kv("q2", p.q2);
    j.kv("Cgn", p.cgn);
    j.kv("Cgn_provenance",
         p.cgn_provenance == CgnProvenance::user ? "user" : "calibrated");
    j.key("init").begin_object();
    j.kv("kind", p.u0.kind_name());
    if (p.u0.kind == InitialKind::constant) {
        j.kv("amplitude", p.u0.amplitude);
    } else if (p.u0.kind == InitialKind::gaussian_bump) {
        j.kv("amplitude", p.u0.amplitude);
        j.kv("width", p.u0.width);
        j.kv("center", p.u0.center);
    } else {
        j.kv("samples", static_cast<long long>(p.u0.values.size()));
    }
    j.kv("kappa", p.u0.kappa);
    j.end_object();
    j.end_object();
}

}  // namespace

void write_constants_report(std::ostream& os, const Cascade& c) {
    JsonWriter j(os);
    j.begin_object();
    j.kv("schema", "chemobound-constants-v1");

    j.key("spec");
    write_spec_block(j, c.prob);

    j.key("exponents").begin_object();
    j.kv("pbar", c.exps.pbar);
    j.key("branches").begin_array();
    for (double b : c.branches) j.value(b);
    j.end_array();
    j.kv("k", c.exps.k);
    j.kv("a1", c.exps.a1);
    j.kv("a2", c.exps.a2);
    j.kv("a3", c.exps.a3);
    j.kv("beta", c.exps.beta);
    j.kv("sigma", c.exps.sigma);
    j.kv("gamma", c.exps.gamma);
    j.kv("delta", c.exps.delta);
    j.kv("lambda", c.exps.lambda);
    j.end_object();

    j.key("relations").begin_array();
    for (const auto& r : c.relations.checks) {
        j.begin_object();
        j.kv("name", r.name);
        j.kv("pass", r.pass);
        j.kv("margin", r.margin);
        j.end_object();
    }
    j.end_array();

    j.key("gn").begin_object();
    j.kv("cgn", c.gn.cgn);
    j.kv("observed_max", c.gn.observed_max);
    j.key("per_case_max").begin_array();
    for (double m : c.gn.per_case_max) j.value(m);
    j.end_array();
    j.kv("samples", static_cast<long long>(c.gn.samples));
    j.kv("seed", static_cast<long long>(c.gn.seed));
    j.kv("pass", c.gn.pass);
    j.end_object();

    j.key("cascade").begin_object();
    j.kv("C1", c.en.C1);
    j.kv("C2", c.en.C2);
    j.kv("C3", c.en.C3);
    j.kv("C4", c.en.C4);
    j.kv("C5", c.en.C5);
    j.kv("E0", c.en.E0);
    j.kv("E1", c.en.E1);
    j.kv("E2", c.en.E2);
    j.kv("E3", c.en.E3);
    j.kv("E4", c.en.E4);
    j.kv("E5", c.en.E5);
    j.kv("delta0", c.en.delta0);
    j.kv("D0", c.en.D0);
    j.kv("eps", c.odi.eps);
    j.kv("c4", c.odi.c4);
    j.kv("c5", c.odi.c5);
    j.kv("E8", c.odi.E8);
    j.kv("E9", c.odi.E9);
    j.kv("E10", c.odi.E10);
    j.kv("H", c.odi.H);
    j.kv("phi0", c.phi0);
    j.key("provenance").begin_object();
    j.kv("E4_identically_zero", true);
    j.kv("d0_argument", "delta0 = E2 (the stated D0 argument E0 is read as E2; discrepancy flagged)");
    j.kv("eps_rule", "E0/(2*E1)");
    j.kv("formulas", "E1=C2*C3; E2=alpha*C2*C3+C2*C4+C1*C3; E3=alpha*C2*C4+C1*C4; E5=|E4|+D0; E8=c4*E1; E9=c5*E1; E10=(E5/M)*(p/measure)^(1/p)");
    j.end_object();
    j.end_object();

    j.key("lp_path").begin_object();
    j.kv("L", c.lp.L);
    j.kv("c1", c.lp.c1);
    j.kv("E6", c.lp.E6);
    j.kv("c3", c.lp.c3);
    j.kv("D1", c.lp.D1);
    j.kv("E7", c.lp.E7);
    j.kv("J1", c.lp.J1);
    j.kv("J2", c.lp.J2);
    j.kv("L1", c.lp.L1);
    j.end_object();

    j.key("bounds").begin_object();
    j.kv("phi0", c.phi0);
    j.kv("T_osgood", c.t_osgood.value);
    j.kv("T_osgood_error", c.t_osgood.error);
    j.kv("T_osgood_conservative", c.t_osgood.value - c.t_osgood.error);
    j.kv("tail_cut", c.t_osgood.tail_cut);
    j.kv("T_explicit", c.t_explicit);
    j.end_object();

    j.end_object();
    os << '\n';
}

}  // namespace chemobound

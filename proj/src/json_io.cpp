#include "lqsp/json_io.hpp"

#include <fstream>

#include "lqsp/errors.hpp"

namespace lqsp {

namespace {

json complex_to_json(cplx c) {
    return json::array({c.real(), c.imag()});
}

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw DomainError("complex value must be a [re, im] pair");
    }
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json mat2_to_json(const Mat2& m) {
    return json::array({complex_to_json(m.m00), complex_to_json(m.m01),
                        complex_to_json(m.m10), complex_to_json(m.m11)});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw DomainError("matrix value must be four [re, im] pairs, row major");
    }
    return Mat2{complex_from_json(j[0]), complex_from_json(j[1]),
                complex_from_json(j[2]), complex_from_json(j[3])};
}

const char* basis_name(Basis b) {
    return b == Basis::zero ? "zero" : "plus";
}

Basis basis_from_name(const std::string& name) {
    if (name == "plus") return Basis::plus;
    if (name == "zero") return Basis::zero;
    throw DomainError("unknown basis \"" + name + "\", expected plus or zero");
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw DomainError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

}  // namespace

json laurent_to_json(const LaurentPolynomial& p) {
    json coeffs = json::array();
    for (int k = -p.degree(); k <= p.degree(); ++k) {
        coeffs.push_back(complex_to_json(p.coeff(k)));
    }
    return json{{"kind", "laurent"}, {"degree", p.degree()},
                {"coeffs", std::move(coeffs)}};
}

LaurentPolynomial laurent_from_json(const json& j) {
    if (field(j, "kind").get<std::string>() != "laurent") {
        throw DomainError("coefficient object is not of kind laurent");
    }
    int degree = field(j, "degree").get<int>();
    if (degree < 0) {
        throw DomainError("laurent degree must be nonnegative");
    }
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() ||
        coeffs.size() != static_cast<size_t>(2 * degree + 1)) {
        throw DomainError("laurent coeffs must list 2*degree+1 pairs");
    }
    std::vector<cplx> c;
    c.reserve(coeffs.size());
    for (const json& entry : coeffs) {
        c.push_back(complex_from_json(entry));
    }
    return LaurentPolynomial(degree, std::move(c));
}

json target_pair_to_json(const TargetPair& pair) {
    json meta{{"family", pair.meta.family},
              {"tau", pair.meta.tau},
              {"eps_approx", pair.meta.eps_approx},
              {"kappa", pair.meta.kappa},
              {"delta", pair.meta.delta},
              {"t", pair.meta.t},
              {"a", pair.meta.a},
              {"seed", pair.meta.seed},
              {"subnormalization", pair.meta.subnormalization}};
    return json{{"A", laurent_to_json(pair.a)},
                {"B", laurent_to_json(pair.b)},
                {"meta", std::move(meta)}};
}

TargetPair target_pair_from_json(const json& j) {
    TargetPair pair;
    pair.a = laurent_from_json(field(j, "A"));
    pair.b = laurent_from_json(field(j, "B"));
    const json& meta = field(j, "meta");
    pair.meta.family = field(meta, "family").get<std::string>();
    pair.meta.tau = field(meta, "tau").get<double>();
    pair.meta.eps_approx = field(meta, "eps_approx").get<double>();
    pair.meta.kappa = field(meta, "kappa").get<double>();
    pair.meta.delta = field(meta, "delta").get<double>();
    pair.meta.t = field(meta, "t").get<double>();
    pair.meta.a = field(meta, "a").get<double>();
    pair.meta.seed = field(meta, "seed").get<std::int64_t>();
    pair.meta.subnormalization = field(meta, "subnormalization").get<double>();
    return pair;
}

json wilson_report_to_json(const WilsonReport& rep) {
    // The in-memory history leads with the residual of the initial guess; the
    // serialized list keeps one entry per Newton solve so its length equals
    // iterations.
    json history = json::array();
    for (size_t i = 1; i < rep.residual_history.size(); ++i) {
        history.push_back(rep.residual_history[i]);
    }
    return json{{"iterations", rep.iterations},
                {"residual_linf", rep.residual_linf},
                {"converged", rep.converged},
                {"residual_history", std::move(history)}};
}

WilsonReport wilson_report_from_json(const json& j) {
    WilsonReport rep;
    rep.iterations = field(j, "iterations").get<int>();
    rep.residual_linf = field(j, "residual_linf").get<double>();
    rep.converged = field(j, "converged").get<bool>();
    for (const json& r : field(j, "residual_history")) {
        rep.residual_history.push_back(r.get<double>());
    }
    return rep;
}

json quadruple_to_json(const CompletedQuadruple& q) {
    json report{{"wilson", wilson_report_to_json(q.report.wilson)},
                {"unitarity_residual", q.report.unitarity_residual},
                {"eps_coeff", q.report.eps_coeff},
                {"elapsed_seconds", q.report.elapsed_seconds}};
    return json{{"A", laurent_to_json(q.a)}, {"B", laurent_to_json(q.b)},
                {"C", laurent_to_json(q.c)}, {"D", laurent_to_json(q.d)},
                {"report", std::move(report)}};
}

CompletedQuadruple quadruple_from_json(const json& j) {
    CompletedQuadruple q;
    q.a = laurent_from_json(field(j, "A"));
    q.b = laurent_from_json(field(j, "B"));
    q.c = laurent_from_json(field(j, "C"));
    q.d = laurent_from_json(field(j, "D"));
    const json& report = field(j, "report");
    q.report.wilson = wilson_report_from_json(field(report, "wilson"));
    q.report.unitarity_residual =
        field(report, "unitarity_residual").get<double>();
    q.report.eps_coeff = field(report, "eps_coeff").get<double>();
    q.report.elapsed_seconds = field(report, "elapsed_seconds").get<double>();
    return q;
}

json sequence_to_json(const QspSequence& seq) {
    json projectors = json::array();
    for (const Projector& p : seq.projectors) {
        projectors.push_back(
            json::array({complex_to_json(p.v0), complex_to_json(p.v1)}));
    }
    return json{{"E0", mat2_to_json(seq.e0)},
                {"projectors", std::move(projectors)},
                {"truncation_error", seq.truncation_error},
                {"source_degree", seq.source_degree}};
}

QspSequence sequence_from_json(const json& j) {
    QspSequence seq;
    seq.e0 = mat2_from_json(field(j, "E0"));
    for (const json& entry : field(j, "projectors")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw DomainError("projector must be two [re, im] pairs");
        }
        seq.projectors.push_back(
            {complex_from_json(entry[0]), complex_from_json(entry[1])});
    }
    seq.truncation_error = field(j, "truncation_error").get<double>();
    seq.source_degree = field(j, "source_degree").get<int>();
    return seq;
}

json gates_to_json(const QspSequence& seq) {
    json gates = json::array();
    for (const Mat2& g : export_gates(seq)) {
        gates.push_back(mat2_to_json(g));
    }
    return json{{"gates", std::move(gates)}};
}

json verification_to_json(const VerificationReport& rep) {
    return json{{"eps_qsp", rep.eps_qsp},
                {"worst_theta", rep.worst_theta},
                {"grid_points", rep.grid_points},
                {"basis", basis_name(rep.basis)},
                {"per_point_csv", rep.per_point_csv},
                {"elapsed_seconds", rep.elapsed_seconds}};
}

VerificationReport verification_from_json(const json& j) {
    VerificationReport rep;
    rep.eps_qsp = field(j, "eps_qsp").get<double>();
    rep.worst_theta = field(j, "worst_theta").get<double>();
    rep.grid_points = field(j, "grid_points").get<int>();
    rep.basis = basis_from_name(field(j, "basis").get<std::string>());
    rep.per_point_csv = field(j, "per_point_csv").get<std::string>();
    rep.elapsed_seconds = field(j, "elapsed_seconds").get<double>();
    return rep;
}

json run_config_to_json(const RunConfig& cfg) {
    return json{{"eps_fejer", cfg.eps_fejer}, {"max_iter", cfg.max_iter},
                {"grid_points", cfg.grid_points}, {"basis", cfg.basis},
                {"threads", cfg.threads}, {"seed", cfg.seed}};
}

RunConfig run_config_from_json(const json& j) {
    RunConfig cfg;
    cfg.eps_fejer = field(j, "eps_fejer").get<double>();
    cfg.max_iter = field(j, "max_iter").get<int>();
    cfg.grid_points = field(j, "grid_points").get<int>();
    cfg.basis = field(j, "basis").get<std::string>();
    cfg.threads = field(j, "threads").get<int>();
    cfg.seed = field(j, "seed").get<std::int64_t>();
    return cfg;
}

void save_json(const std::string& path, const json& payload,
               const RunConfig& cfg) {
    json out = payload;
    out["run_config"] = run_config_to_json(cfg);
    std::ofstream file(path);
    if (!file) {
        throw Error("cannot open " + path + " for writing");
    }
    file << out.dump(2) << '\n';
    if (!file) {
        throw Error("write to " + path + " failed");
    }
}

json load_json(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw Error("cannot open " + path + " for reading");
    }
    return json::parse(file);
}

}  // namespace lqsp

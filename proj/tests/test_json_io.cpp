#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include "lqsp/complete.hpp"
#include "lqsp/decompose.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/json_io.hpp"
#include "lqsp/targets.hpp"

#include "support.hpp"

using lqsp::cplx;
using lqsp::json;
using lqsp::LaurentPolynomial;

namespace {

// Exact (bitwise) coefficient equality; serialization must not perturb values.
bool same_poly(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.degree() != q.degree()) return false;
    for (int k = -p.degree(); k <= p.degree(); ++k) {
        if (p.coeff(k) != q.coeff(k)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("laurent objects serialize with the documented keys in order") {
    // Awkward values on purpose: non-terminating binary fractions and a
    // subnormal-range magnitude must all survive the round trip unchanged.
    LaurentPolynomial p(1, {cplx(0.1, -1.0 / 3.0), cplx(0.0, 0.0),
                            cplx(1e-308, 2.0 / 7.0)});
    json j = lqsp::laurent_to_json(p);
    CHECK(j["kind"] == "laurent");
    CHECK(j["degree"] == 1);
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0][0].get<double>() == 0.1);
    CHECK(j["coeffs"][0][1].get<double>() == -1.0 / 3.0);

    // Insertion order is part of the format.
    std::string dumped = j.dump();
    CHECK(dumped.rfind("{\"kind\":\"laurent\",\"degree\":1,\"coeffs\":", 0) == 0);

    CHECK(same_poly(lqsp::laurent_from_json(j), p));

    // Text -> value -> text is byte stable.
    CHECK(json::parse(dumped).dump() == dumped);
}

TEST_CASE("malformed laurent input is rejected") {
    json good = lqsp::laurent_to_json(LaurentPolynomial::monomial(1));

    json no_kind = good;
    no_kind.erase("kind");
    CHECK_THROWS_AS(lqsp::laurent_from_json(no_kind), lqsp::DomainError);

    json wrong_kind = good;
    wrong_kind["kind"] = "chebyshev";
    CHECK_THROWS_AS(lqsp::laurent_from_json(wrong_kind), lqsp::DomainError);

    json short_coeffs = good;
    short_coeffs["coeffs"].erase(0);
    CHECK_THROWS_AS(lqsp::laurent_from_json(short_coeffs), lqsp::DomainError);

    json bad_pair = good;
    bad_pair["coeffs"][0] = json::array({1.0});
    CHECK_THROWS_AS(lqsp::laurent_from_json(bad_pair), lqsp::DomainError);
}

TEST_CASE("target pairs carry every metadata field through a round trip") {
    lqsp::TargetPair pair = lqsp::build_random(20, 3);
    pair.meta.tau = 1.5;
    pair.meta.kappa = 10.0;
    pair.meta.delta = 0.25;
    pair.meta.t = 0.4;
    pair.meta.a = 0.9;

    lqsp::TargetPair back = lqsp::target_pair_from_json(
        lqsp::target_pair_to_json(pair));
    CHECK(same_poly(back.a, pair.a));
    CHECK(same_poly(back.b, pair.b));
    CHECK(back.meta.family == pair.meta.family);
    CHECK(back.meta.tau == pair.meta.tau);
    CHECK(back.meta.eps_approx == pair.meta.eps_approx);
    CHECK(back.meta.kappa == pair.meta.kappa);
    CHECK(back.meta.delta == pair.meta.delta);
    CHECK(back.meta.t == pair.meta.t);
    CHECK(back.meta.a == pair.meta.a);
    CHECK(back.meta.seed == pair.meta.seed);
    CHECK(back.meta.subnormalization == pair.meta.subnormalization);
}

TEST_CASE("serialized wilson history has one entry per iteration") {
    lqsp::WilsonReport rep;
    rep.iterations = 3;
    rep.residual_linf = 1e-15;
    rep.converged = true;
    // In memory the history leads with the initial-guess residual.
    rep.residual_history = {0.5, 1e-3, 1e-7, 1e-15};

    json j = lqsp::wilson_report_to_json(rep);
    REQUIRE(j["residual_history"].size() == 3);
    CHECK(j["residual_history"][0].get<double>() == 1e-3);
    CHECK(j["iterations"] == 3);
    CHECK(j["converged"] == true);

    lqsp::WilsonReport back = lqsp::wilson_report_from_json(j);
    CHECK(back.iterations == 3);
    CHECK(back.residual_linf == 1e-15);
    CHECK(back.residual_history.size() == 3);
}

TEST_CASE("completed quadruples round trip bit exactly") {
    lqsp::CompletedQuadruple q = lqsp::complete(lqsp::build_random(20, 1));
    lqsp::CompletedQuadruple back =
        lqsp::quadruple_from_json(lqsp::quadruple_to_json(q));
    CHECK(same_poly(back.a, q.a));
    CHECK(same_poly(back.b, q.b));
    CHECK(same_poly(back.c, q.c));
    CHECK(same_poly(back.d, q.d));
    CHECK(back.report.unitarity_residual == q.report.unitarity_residual);
    CHECK(back.report.eps_coeff == q.report.eps_coeff);
    CHECK(back.report.wilson.iterations == q.report.wilson.iterations);
    CHECK(back.report.wilson.converged == q.report.wilson.converged);
}

TEST_CASE("sequences and gate lists serialize consistently") {
    uint64_t counter = 0;
    std::vector<lqsp::Projector> projs;
    for (int k = 0; k < 4; ++k) {
        projs.push_back(testsupport::random_projector(11, counter));
    }
    lqsp::QspSequence seq =
        lqsp::decompose(testsupport::forward_sequence(lqsp::mat2_identity(), projs));

    json j = lqsp::sequence_to_json(seq);
    lqsp::QspSequence back = lqsp::sequence_from_json(j);
    CHECK(back.e0.m00 == seq.e0.m00);
    CHECK(back.e0.m11 == seq.e0.m11);
    REQUIRE(back.projectors.size() == seq.projectors.size());
    for (size_t k = 0; k < seq.projectors.size(); ++k) {
        CHECK(back.projectors[k].v0 == seq.projectors[k].v0);
        CHECK(back.projectors[k].v1 == seq.projectors[k].v1);
    }
    CHECK(back.truncation_error == seq.truncation_error);
    CHECK(back.source_degree == seq.source_degree);

    json gates = lqsp::gates_to_json(seq);
    CHECK(gates["gates"].size() == lqsp::export_gates(seq).size());
    REQUIRE(gates["gates"][0].size() == 4);
}

TEST_CASE("saved artifacts are stamped with the run configuration") {
    lqsp::RunConfig cfg;
    cfg.seed = 42;
    cfg.basis = "zero";
    json payload = lqsp::laurent_to_json(LaurentPolynomial::monomial(2));

    const std::string path = "tmp_test_json_io_artifact.json";
    lqsp::save_json(path, payload, cfg);
    json loaded = lqsp::load_json(path);
    std::remove(path.c_str());

    CHECK(loaded["kind"] == "laurent");
    REQUIRE(loaded.contains("run_config"));
    lqsp::RunConfig back = lqsp::run_config_from_json(loaded["run_config"]);
    CHECK(back.eps_fejer == cfg.eps_fejer);
    CHECK(back.max_iter == cfg.max_iter);
    CHECK(back.basis == "zero");
    CHECK(back.seed == 42);

    CHECK_THROWS_AS(lqsp::load_json("does_not_exist_anywhere.json"),
                    lqsp::Error);
}

TEST_CASE("verification reports round trip including the basis name") {
    lqsp::VerificationReport rep;
    rep.eps_qsp = 3.25e-13;
    rep.worst_theta = 1.75;
    rep.grid_points = 808;
    rep.basis = lqsp::Basis::zero;
    rep.per_point_csv = "points.csv";
    rep.elapsed_seconds = 0.125;

    json j = lqsp::verification_to_json(rep);
    CHECK(j["basis"] == "zero");
    lqsp::VerificationReport back = lqsp::verification_from_json(j);
    CHECK(back.eps_qsp == rep.eps_qsp);
    CHECK(back.worst_theta == rep.worst_theta);
    CHECK(back.grid_points == rep.grid_points);
    CHECK(back.basis == lqsp::Basis::zero);
    CHECK(back.per_point_csv == rep.per_point_csv);

    json bad = j;
    bad["basis"] = "hadamard";
    CHECK_THROWS_AS(lqsp::verification_from_json(bad), lqsp::DomainError);
}

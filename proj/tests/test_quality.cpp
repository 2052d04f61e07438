#include <doctest.h>

#include <cmath>
#include <set>

#include "commdet/quality.hpp"
#include "test_util.hpp"

using namespace commdet;
using testutil::brute_modularity;

TEST_CASE("single-group modularity") {
    Graph g = testutil::random_multigraph(15, 40, 8);
    Partition p = Partition::single_group(g);
    CHECK(std::fabs(modularity(p, 1.0)) <= 1e-12);
    CHECK(modularity(p, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(modularity(p, 2.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("two-triangles natural split: Q = 5/14 at gamma 1") {
    Graph g = testutil::two_triangles_graph();
    Partition p(g, {0, 0, 0, 1, 1, 1}, 2);
    CHECK(modularity(p, 1.0) == doctest::Approx(5.0 / 14.0).epsilon(1e-14));
    CHECK(modularity(p, 1.0) ==
          doctest::Approx(brute_modularity(g, p.assignment(), 1.0, NullModel::configuration))
              .epsilon(1e-13));
}

TEST_CASE("group-statistics form matches the double sum on random instances") {
    rng::Generator gen(17);
    for (int round = 0; round < 10; ++round) {
        Graph g = testutil::random_multigraph(16, 50, 300 + round);
        const GroupId q = 3;
        Partition p(g, testutil::random_assignment(16, q, gen), q);
        for (double gamma : {0.5, 1.0, 1.7}) {
            CHECK(modularity(p, gamma, NullModel::configuration) ==
                  doctest::Approx(brute_modularity(g, p.assignment(), gamma,
                                                   NullModel::configuration))
                      .epsilon(1e-12));
            CHECK(modularity(p, gamma, NullModel::uniform) ==
                  doctest::Approx(brute_modularity(g, p.assignment(), gamma, NullModel::uniform))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("classic modularity stays within [-1, 1]") {
    rng::Generator gen(23);
    for (int round = 0; round < 30; ++round) {
        Graph g = testutil::random_multigraph(12, 30, 700 + round);
        const GroupId q = 1 + static_cast<GroupId>(gen.uniform_below(5));
        Partition p(g, testutil::random_assignment(12, q, gen), q);
        const double value = modularity(p, 1.0);
        CHECK(value >= -1.0);
        CHECK(value <= 1.0);
    }
}

TEST_CASE("empty graph is rejected") {
    Graph g(3, {});
    Partition p = Partition::single_group(g);
    CHECK_THROWS_WITH_AS(modularity(p, 1.0), "empty graph", std::invalid_argument);
}

TEST_CASE("delta_modularity") {
    SUBCASE("no-op move has zero delta") {
        Graph g = testutil::two_triangles_graph();
        Partition p(g, {0, 0, 0, 1, 1, 1}, 2);
        CHECK(delta_modularity(p, 2, 0, 1.0) == 0.0);
    }
    SUBCASE("matches full recomputation and negates on reversal") {
        rng::Generator gen(31);
        for (int round = 0; round < 8; ++round) {
            Graph g = testutil::random_multigraph(14, 45, 500 + round);
            const GroupId q = 3;
            Partition p(g, testutil::random_assignment(14, q, gen), q);
            for (auto null : {NullModel::configuration, NullModel::uniform}) {
                for (int trial = 0; trial < 40; ++trial) {
                    const NodeId node = static_cast<NodeId>(gen.uniform_below(14));
                    const GroupId target = static_cast<GroupId>(gen.uniform_below(q));
                    const double gamma = 0.25 + gen.uniform01() * 2.0;
                    const GroupId from = p.group_of(node);

                    const double before = modularity(p, gamma, null);
                    const double predicted = delta_modularity(p, node, target, gamma, null);
                    p.move(node, target);
                    const double after = modularity(p, gamma, null);
                    CHECK(std::fabs(predicted - (after - before)) <= 1e-12);

                    const double reverse = delta_modularity(p, node, from, gamma, null);
                    CHECK(std::fabs(reverse + predicted) <= 1e-12);
                    p.move(node, from);
                }
            }
        }
    }
}

TEST_CASE("dcsbm log-likelihood") {
    SUBCASE("all-ones rates give -m") {
        Graph g = testutil::random_multigraph(10, 35, 91);
        rng::Generator gen(3);
        Partition p(g, testutil::random_assignment(10, 3, gen), 3);
        const BlockMatrix ones = BlockMatrix::planted(3, 1.0, 1.0);
        CHECK(dcsbm_log_likelihood(p, ones) ==
              doctest::Approx(-static_cast<double>(g.edge_count())).epsilon(1e-12));
    }
    SUBCASE("single block closed form: m log w - m w") {
        Graph g = testutil::random_multigraph(10, 35, 92);
        Partition p = Partition::single_group(g);
        const double w = 1.7;
        const double m = static_cast<double>(g.edge_count());
        CHECK(dcsbm_log_likelihood(p, BlockMatrix::planted(1, w, w)) ==
              doctest::Approx(m * std::log(w) - m * w).epsilon(1e-12));
    }
    SUBCASE("matches the brute-force double sum") {
        Graph g = testutil::two_triangles_graph();
        Partition p(g, {0, 0, 0, 1, 1, 1}, 2);
        const BlockMatrix rates = BlockMatrix::planted(2, 12.0 / 7.0, 2.0 / 7.0);
        CHECK(dcsbm_log_likelihood(p, rates) ==
              doctest::Approx(testutil::brute_dcsbm(g, p.assignment(), rates)).epsilon(1e-12));

        rng::Generator gen(55);
        for (int round = 0; round < 6; ++round) {
            Graph h = testutil::random_multigraph(12, 40, 800 + round);
            const GroupId q = 3;
            Partition ph(h, testutil::random_assignment(12, q, gen), q);
            std::vector<double> values(static_cast<std::size_t>(q) * q);
            for (GroupId r = 0; r < q; ++r)
                for (GroupId s = r; s < q; ++s) {
                    const double w = 0.2 + gen.uniform01() * 2.0;
                    values[static_cast<std::size_t>(r) * q + s] = w;
                    values[static_cast<std::size_t>(s) * q + r] = w;
                }
            const BlockMatrix omega(q, values);
            CHECK(dcsbm_log_likelihood(ph, omega) ==
                  doctest::Approx(testutil::brute_dcsbm(h, ph.assignment(), omega)).epsilon(1e-11));
        }
    }
    SUBCASE("zero rate on an occupied block is rejected") {
        Graph g = testutil::two_triangles_graph();
        Partition p(g, {0, 0, 0, 1, 1, 1}, 2);
        CHECK_THROWS_WITH_AS(dcsbm_log_likelihood(p, BlockMatrix::planted(2, 1.0, 0.0)),
                             "zero-rate block with observed edges", std::invalid_argument);
    }
}

TEST_CASE("sbm log-likelihood") {
    SUBCASE("all-ones rates give -n^2/2") {
        Graph g = testutil::random_multigraph(9, 25, 77);
        rng::Generator gen(4);
        Partition p(g, testutil::random_assignment(9, 2, gen), 2);
        CHECK(sbm_log_likelihood(p, BlockMatrix::planted(2, 1.0, 1.0)) ==
              doctest::Approx(-81.0 / 2.0).epsilon(1e-12));
    }
    SUBCASE("single block closed form: m log w - n^2 w / 2") {
        Graph g = testutil::random_multigraph(9, 25, 78);
        Partition p = Partition::single_group(g);
        const double w = 0.8;
        const double m = static_cast<double>(g.edge_count());
        CHECK(sbm_log_likelihood(p, BlockMatrix::planted(1, w, w)) ==
              doctest::Approx(m * std::log(w) - 81.0 * w / 2.0).epsilon(1e-12));
    }
    SUBCASE("matches the brute-force double sum") {
        rng::Generator gen(56);
        for (int round = 0; round < 6; ++round) {
            Graph h = testutil::random_multigraph(11, 30, 900 + round);
            const GroupId q = 3;
            Partition ph(h, testutil::random_assignment(11, q, gen), q);
            const BlockMatrix omega = BlockMatrix::planted(q, 1.3, 0.4);
            CHECK(sbm_log_likelihood(ph, omega) ==
                  doctest::Approx(testutil::brute_sbm(h, ph.assignment(), omega)).epsilon(1e-11));
        }
    }
}

TEST_CASE("planted-partition log-likelihood") {
    SUBCASE("equal rates: m log w - m w, independent of the partition") {
        Graph g = testutil::random_multigraph(12, 38, 45);
        const double w = 0.9;
        const double expected = static_cast<double>(g.edge_count()) * (std::log(w) - w);
        rng::Generator gen(6);
        for (GroupId q : {1u, 2u, 4u}) {
            Partition p(g, testutil::random_assignment(12, q, gen), q);
            CHECK(pp_log_likelihood(p, {w, w}) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("agrees exactly with dcsbm on the two-valued matrix") {
        rng::Generator gen(57);
        for (int round = 0; round < 10; ++round) {
            Graph g = testutil::random_multigraph(13, 42, 1100 + round);
            const GroupId q = 3;
            Partition p(g, testutil::random_assignment(13, q, gen), q);
            const PlantedPartitionParams params{1.4, 0.6};
            CHECK(pp_log_likelihood(p, params) ==
                  dcsbm_log_likelihood(p, BlockMatrix::planted(q, 1.4, 0.6)));
        }
    }
    SUBCASE("two-triangles natural split matches brute force") {
        Graph g = testutil::two_triangles_graph();
        Partition p(g, {0, 0, 0, 1, 1, 1}, 2);
        const PlantedPartitionParams params{12.0 / 7.0, 2.0 / 7.0};
        CHECK(pp_log_likelihood(p, params) ==
              doctest::Approx(
                  testutil::brute_dcsbm(g, p.assignment(), BlockMatrix::planted(2, 12.0 / 7.0, 2.0 / 7.0)))
                  .epsilon(1e-12));
    }
    SUBCASE("omega_out = 0 allowed only with no between-group edges") {
        Graph g = testutil::two_triangles_graph();
        Partition split(g, {0, 0, 0, 1, 1, 1}, 2);
        CHECK_THROWS_AS(pp_log_likelihood(split, {1.0, 0.0}), std::invalid_argument);

        std::vector<std::pair<NodeId, NodeId>> pairs = {{0, 1}, {0, 2}, {1, 2},
                                                        {3, 4}, {3, 5}, {4, 5}};
        Graph disjoint = build_graph(pairs);
        Partition clean(disjoint, {0, 0, 0, 1, 1, 1}, 2);
        CHECK(std::isfinite(pp_log_likelihood(clean, {1.0, 0.0})));
    }
}

TEST_CASE("equivalence constants") {
    SUBCASE("gamma is the logarithmic mean") {
        const auto c = equivalence_constants({4.0 / 3.0, 2.0 / 3.0}, 100);
        CHECK(c.gamma == doctest::Approx((2.0 / 3.0) / std::log(2.0)).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(0.961797).epsilon(1e-6));
    }
    SUBCASE("rate ratio e gives gamma = w0 (e - 1)") {
        const double w0 = 0.37;
        const auto c = equivalence_constants({std::exp(1.0) * w0, w0}, 50);
        CHECK(c.gamma == doctest::Approx(w0 * (std::exp(1.0) - 1.0)).epsilon(1e-12));
    }
    SUBCASE("disassortative rates flip the sign of B") {
        const auto c = equivalence_constants({0.5, 1.5}, 42);
        CHECK(c.b < 0.0);
        CHECK(c.gamma > 0.0);
    }
    SUBCASE("gamma lies strictly between the rates and is symmetric") {
        rng::Generator gen(12);
        for (int trial = 0; trial < 50; ++trial) {
            const double a = 0.1 + gen.uniform01() * 3.0;
            const double b = 0.1 + gen.uniform01() * 3.0;
            if (a == b) continue;
            const auto ab = equivalence_constants({a, b}, 10);
            const auto ba = equivalence_constants({b, a}, 10);
            CHECK(ab.gamma == doctest::Approx(ba.gamma).epsilon(1e-12));
            CHECK(ab.gamma > std::min(a, b));
            CHECK(ab.gamma < std::max(a, b));
        }
    }
    SUBCASE("equal rates are degenerate") {
        CHECK_THROWS_WITH_AS(equivalence_constants({0.7, 0.7}, 10),
                             "degenerate: likelihood independent of partition",
                             std::invalid_argument);
    }
}

TEST_CASE("equivalence identity: logL - B Q(gamma) is the constant C") {
    rng::Generator gen(61);
    for (int instance = 0; instance < 3; ++instance) {
        Graph g = testutil::random_multigraph(20, 70, 1300 + instance);
        const PlantedPartitionParams params{1.5, 0.5};
        const auto constants = equivalence_constants(params, g.edge_count());

        double lo = 0.0, hi = 0.0;
        for (int trial = 0; trial < 120; ++trial) {
            const GroupId q = 1 + static_cast<GroupId>(gen.uniform_below(5));
            Partition p(g, testutil::random_assignment(20, q, gen), q);
            const double offset =
                pp_log_likelihood(p, params) -
                constants.b * modularity(p, constants.gamma, NullModel::configuration);
            if (trial == 0) lo = hi = offset;
            lo = std::min(lo, offset);
            hi = std::max(hi, offset);
        }
        const double mean = 0.5 * (lo + hi);
        CHECK((hi - lo) / std::max(1.0, std::fabs(mean)) <= 1e-9);
        CHECK(std::fabs(mean - constants.c) / std::max(1.0, std::fabs(constants.c)) <= 1e-9);
    }
}

TEST_CASE("argmax transfer on exhaustively enumerable instances") {
    // Likelihood-optimal and modularity-optimal partition sets coincide at
    // the equivalent gamma; with the rates swapped the likelihood optimum is
    // the modularity minimum.
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = testutil::random_multigraph(7, 14, 2000 + seed);
        for (bool assortative : {true, false}) {
            const PlantedPartitionParams params = assortative
                                                      ? PlantedPartitionParams{1.5, 0.5}
                                                      : PlantedPartitionParams{0.5, 1.5};
            const auto constants = equivalence_constants(params, g.edge_count());

            double best_likelihood = 0.0, best_modularity = 0.0;
            bool first = true;
            std::vector<double> likelihoods, modularities;
            std::vector<std::vector<GroupId>> assignments;
            testutil::enumerate_partitions(7, 2, [&](const std::vector<GroupId>& a) {
                Partition p(g, a, 2);
                const double logl = pp_log_likelihood(p, params);
                double q_value = modularity(p, constants.gamma, NullModel::configuration);
                if (!assortative) q_value = -q_value;  // B < 0: minimize
                likelihoods.push_back(logl);
                modularities.push_back(q_value);
                assignments.push_back(a);
                if (first || logl > best_likelihood) best_likelihood = logl;
                if (first || q_value > best_modularity) best_modularity = q_value;
                first = false;
            });

            std::set<std::vector<GroupId>> by_likelihood, by_modularity;
            for (std::size_t i = 0; i < assignments.size(); ++i) {
                if (likelihoods[i] >= best_likelihood - 1e-9)
                    by_likelihood.insert(assignments[i]);
                if (modularities[i] >= best_modularity - 1e-9)
                    by_modularity.insert(assignments[i]);
            }
            CHECK(by_likelihood == by_modularity);
        }
    }
}

// Copyright 2026 The cvqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvqkd/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cvqkd/philox.h"

namespace cvqkd {

namespace {

constexpr uint64_t kChunkRounds = 1 << 14;

// Raw sums for one basis; a = Alice, b = Bob, e = Eve.
struct Sums {
    uint64_t n = 0;
    double a = 0, b = 0, e = 0;
    double aa = 0, bb = 0, ee = 0, ab = 0, be = 0;

    void add(double va, double vb, double ve) {
        n++;
        a += va;
        b += vb;
        e += ve;
        aa += va * va;
        bb += vb * vb;
        ee += ve * ve;
        ab += va * vb;
        be += vb * ve;
    }

    Sums &operator+=(const Sums &o) {
        n += o.n;
        a += o.a;
        b += o.b;
        e += o.e;
        aa += o.aa;
        bb += o.bb;
        ee += o.ee;
        ab += o.ab;
        be += o.be;
        return *this;
    }
};

struct ChunkSums {
    std::array<Sums, 2> by_basis;

    ChunkSums &operator+=(const ChunkSums &o) {
        by_basis[0] += o.by_basis[0];
        by_basis[1] += o.by_basis[1];
        return *this;
    }
};

// Fixed-shape pairwise reduction over chunk index.
ChunkSums pairwise_total(const std::vector<ChunkSums> &chunks, size_t lo, size_t hi) {
    if (hi - lo == 1) {
        return chunks[lo];
    }
    size_t mid = lo + (hi - lo) / 2;
    ChunkSums left = pairwise_total(chunks, lo, mid);
    left += pairwise_total(chunks, mid, hi);
    return left;
}

double residual(double var_target, double cov, double var_given) {
    if (var_given <= 0) {
        return var_target;
    }
    return std::max(0.0, var_target - cov * cov / var_given);
}

PhaseVector row_of(const SymplecticMap &map, QuadIndex q) { return map.row(q); }

}  // namespace

SimConfig::SimConfig(const ChannelParams &channel, AttackKind kind, uint64_t samples, uint64_t seed)
    : channel_(channel), kind_(kind), samples_(samples), seed_(seed) {
    if (samples < kMinSamples) {
        std::ostringstream ss;
        ss << "Monte Carlo needs samples >= " << kMinSamples << " (got " << samples << ")";
        throw DomainError(ss.str());
    }
}

RoundPlan round_plan(AttackKind kind, const ChannelParams &channel) {
    RoundPlan plan;
    for (Quadrature basis : {Quadrature::X, Quadrature::P}) {
        EveReadout readout = eve_readout(kind, channel, basis);
        SymplecticMap circuit = build_circuit(circuit_for(channel, readout.theta));
        BasisPlan &bp = plan.by_basis[static_cast<size_t>(basis)];
        bp.bob_row = row_of(circuit, {Mode::A, basis});
        bp.eve_row = row_of(circuit, readout.output);
        if (kind == AttackKind::BellMeasurement) {
            // Both detectors fire before the basis is announced.
            bp.eve_recorded = {{Mode::B, Quadrature::X}, {Mode::C, Quadrature::P}};
        } else {
            bp.eve_recorded = {readout.output};
        }
    }
    return plan;
}

double standard_error(double variance_estimate, uint64_t samples) {
    if (samples < 2) {
        throw std::invalid_argument("standard_error needs at least 2 samples");
    }
    return variance_estimate * std::sqrt(2.0 / static_cast<double>(samples - 1));
}

EmpiricalReport run_simulation(const SimConfig &config, unsigned workers) {
    const RoundPlan plan = round_plan(config.kind(), config.channel());
    const double signal_sd = std::sqrt(config.channel().v_a() / 4);
    const double vacuum_sd = std::sqrt(kVacuumVariance);
    const uint64_t samples = config.samples();
    const uint64_t seed = config.seed();
    const bool bell = config.kind() == AttackKind::BellMeasurement;

    // Bell measurement: both outcomes exist in every round, the announced basis picks one.
    PhaseVector bell_x_row = plan.by_basis[0].eve_row;
    PhaseVector bell_p_row = plan.by_basis[1].eve_row;

    const size_t num_chunks = static_cast<size_t>((samples + kChunkRounds - 1) / kChunkRounds);
    std::vector<ChunkSums> chunks(num_chunks);

    auto run_chunk = [&](size_t chunk) {
        ChunkSums sums;
        uint64_t begin = chunk * kChunkRounds;
        uint64_t end = std::min(samples, begin + kChunkRounds);
        for (uint64_t round = begin; round < end; round++) {
            RoundStream rng(seed, round);
            auto alice = rng.next_normal_pair();
            auto vac_a = rng.next_normal_pair();
            auto vac_b = rng.next_normal_pair();
            auto vac_c = rng.next_normal_pair();
            size_t basis = static_cast<size_t>(rng.next_u64() & 1);

            double x_alice = signal_sd * alice[0];
            double p_alice = signal_sd * alice[1];
            PhaseVector in;
            in << x_alice + vacuum_sd * vac_a[0], p_alice + vacuum_sd * vac_a[1], vacuum_sd * vac_b[0],
                vacuum_sd * vac_b[1], vacuum_sd * vac_c[0], vacuum_sd * vac_c[1];

            const BasisPlan &bp = plan.by_basis[basis];
            double bob = bp.bob_row.dot(in);
            double eve;
            if (bell) {
                double eve_x = bell_x_row.dot(in);
                double eve_p = bell_p_row.dot(in);
                eve = basis == 0 ? eve_x : eve_p;
            } else {
                eve = bp.eve_row.dot(in);
            }
            sums.by_basis[basis].add(basis == 0 ? x_alice : p_alice, bob, eve);
        }
        chunks[chunk] = sums;
    };

    unsigned threads = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
    threads = static_cast<unsigned>(std::min<size_t>(threads, num_chunks));
    if (threads <= 1) {
        for (size_t c = 0; c < num_chunks; c++) {
            run_chunk(c);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back([&] {
                for (size_t c = next++; c < num_chunks; c = next++) {
                    run_chunk(c);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    ChunkSums total = pairwise_total(chunks, 0, num_chunks);
    EmpiricalReport report{};
    report.samples = samples;
    for (size_t basis = 0; basis < 2; basis++) {
        const Sums &s = total.by_basis[basis];
        if (s.n < 2) {
            throw std::runtime_error("Monte Carlo: too few rounds in one basis");
        }
        double n = static_cast<double>(s.n);
        double mean_a = s.a / n, mean_b = s.b / n, mean_e = s.e / n;
        double var_a = s.aa / n - mean_a * mean_a;
        double var_b = s.bb / n - mean_b * mean_b;
        double var_e = s.ee / n - mean_e * mean_e;
        double cov_ab = s.ab / n - mean_a * mean_b;
        double cov_be = s.be / n - mean_b * mean_e;
        double v_ba = residual(var_b, cov_ab, var_a);
        double v_be = residual(var_b, cov_be, var_e);
        if (basis == 0) {
            report.rounds_x = s.n;
            report.v_ba_x_hat = v_ba;
            report.v_be_x_hat = v_be;
            report.se_ba_x = standard_error(v_ba, s.n);
            report.se_be_x = standard_error(v_be, s.n);
        } else {
            report.rounds_p = s.n;
            report.v_ba_p_hat = v_ba;
            report.v_be_p_hat = v_be;
            report.se_ba_p = standard_error(v_ba, s.n);
            report.se_be_p = standard_error(v_be, s.n);
        }
    }
    return report;
}

}  // namespace cvqkd

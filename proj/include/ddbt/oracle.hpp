#pragma once

#include "ddbt/balancing.hpp"
#include "ddbt/model.hpp"

namespace ddbt {

struct OrdinaryGramians {
    Matrix P0;
    Matrix Q0;
};

struct OrdinaryTruncation {
    StateSpaceModel rom;
    BalancingResult balancing;
};

namespace oracle {

// Unique X with A X Aᵀ − X + W = 0. Throws Unstable when ρ(A) ≥ 1.
Matrix solveDiscreteLyapunov(const Matrix& A, const Matrix& Wrhs);
OrdinaryGramians ordinaryGramians(const StateSpaceModel& model);
OrdinaryTruncation ordinaryBalancedTruncation(const StateSpaceModel& model, Index r);
// The 6-state cart with double pendulum, entries rounded to 4 decimals.
StateSpaceModel builtinTrueSystem();

}  // namespace oracle
}  // namespace ddbt

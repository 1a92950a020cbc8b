#pragma once

#include "instance.hpp"
#include "maxnim.hpp"
#include "reference.hpp"

namespace josephus {

[[nodiscard]] inline SurvivorReport survivor(const JosephusInstance& instance, Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::maxnim: return survivor_maxnim(instance);
    case Algorithm::linear: return survivor_linear(instance);
    case Algorithm::block: return survivor_block(instance);
    case Algorithm::oracle: return survivor_oracle(instance);
    }
    throw InvalidInstance("unknown algorithm");
}

} // namespace josephus

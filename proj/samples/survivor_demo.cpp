// Computes one survivor with every algorithm and prints the maxnim trace.

#include <iostream>

#include "josephus/josephus.hpp"

int main() {
    const josephus::JosephusInstance instance(41, 3);
    for (auto a : {josephus::Algorithm::maxnim, josephus::Algorithm::linear, josephus::Algorithm::block,
                   josephus::Algorithm::oracle}) {
        std::cout << josephus::to_string(a) << ": " << josephus::survivor(instance, a).one_indexed() << '\n';
    }

    const auto [report, trace] = josephus::survivor_maxnim_traced(instance);
    std::cout << "iterates:";
    for (auto x : trace.xs) std::cout << ' ' << x;
    std::cout << "\np = " << trace.p() << ", survivor = " << report.one_indexed() << '\n';
}

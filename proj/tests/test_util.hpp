#pragma once

// shared test-side oracles

#include "fincat/functor.hpp"

#include <algorithm>

namespace test_util {

// brute-force isomorphism-of-categories search
inline bool isomorphic_by_search(fincat::CatPtr a, fincat::CatPtr b) {
    if (a->object_count() != b->object_count() || a->morphism_count() != b->morphism_count())
        return false;
    bool found = false;
    fincat::enumerate_functors_visit(a, b, [&](const fincat::Functor& f) {
        std::vector<bool> ohit(b->object_count(), false), mhit(b->morphism_count(), false);
        for (int o : f.omap) ohit[o] = true;
        for (int m : f.mmap) mhit[m] = true;
        bool bij = std::all_of(ohit.begin(), ohit.end(), [](bool x) { return x; }) &&
                   std::all_of(mhit.begin(), mhit.end(), [](bool x) { return x; });
        if (bij) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace test_util

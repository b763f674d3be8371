#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ihara {

// Enumerates, once per rotation class, every primitive cyclic word of length
// 1..max_len over symbols [0, alphabet) whose consecutive transitions
// (including last -> first) are allowed. Each class is reported by its
// lexicographically least rotation, i.e. as a Lyndon word.
//
// Generation is the Fredricksen-Kessler-Maiorana recursion restricted to the
// transition graph: every prefix of a Lyndon word is a prenecklace, so pruning
// disallowed transitions never removes a Lyndon word.
//
// successors(s) must return the allowed successors of s in ascending order;
// allowed(a, b) closes the cycle; visit receives the word as a span.
template <class Successors, class Allowed, class Visit>
void for_each_lyndon_cycle(std::size_t alphabet, std::size_t max_len, Successors&& successors,
                           Allowed&& allowed, Visit&& visit) {
    if (max_len == 0 || alphabet == 0) return;
    std::vector<int> word(max_len + 1, 0);  // 1-based
    std::vector<int> all(alphabet);
    for (std::size_t s = 0; s < alphabet; ++s) all[s] = static_cast<int>(s);

    auto recurse = [&](auto&& self, std::size_t t, std::size_t p) -> void {
        const std::size_t len = t - 1;
        if (len >= 1 && p == len && allowed(word[len], word[1]))
            visit(std::span<const int>(word.data() + 1, len));
        if (t > max_len) return;
        if (t == 1) {
            for (int s : all) {
                word[1] = s;
                self(self, 2, 1);
            }
            return;
        }
        const int floor = word[t - p];
        for (int s : successors(word[t - 1])) {
            if (s < floor) continue;
            word[t] = s;
            self(self, t + 1, s == floor ? p : t);
        }
    };
    recurse(recurse, 1, 1);
}

}  // namespace ihara

// Copyright 2026 The Atlantis Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atlantis/rng.hpp"

#include <cstring>

#include <sodium.h>

namespace atlantis {

void SystemRng::fill(std::span<std::uint8_t> out) {
    if (sodium_init() < 0) {
        std::abort();
    }
    randombytes_buf(out.data(), out.size());
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t counter) : counter_(counter) {
    for (int i = 0; i < 8; ++i) {
        seed_[i] = static_cast<std::uint8_t>(seed >> (8 * i));
    }
}

SeededRng::SeededRng(const std::array<std::uint8_t, 32>& seed, std::uint64_t counter)
    : seed_(seed), counter_(counter) {}

void SeededRng::fill(std::span<std::uint8_t> out) {
    std::size_t filled = 0;
    while (filled < out.size()) {
        std::uint8_t block[crypto_hash_sha512_BYTES];
        std::uint8_t preimage[40];
        std::memcpy(preimage, seed_.data(), 32);
        for (int i = 0; i < 8; ++i) {
            preimage[32 + i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
        }
        crypto_hash_sha512(block, preimage, sizeof(preimage));
        ++counter_;
        const std::size_t n = std::min(out.size() - filled, sizeof(block));
        std::memcpy(out.data() + filled, block, n);
        filled += n;
    }
}

} // namespace atlantis

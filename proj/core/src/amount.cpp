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

#include "atlantis/amount.hpp"

#include <algorithm>

namespace atlantis {

std::string formatU128(u128 v) {
    if (v == 0) {
        return "0";
    }
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<u128> parseU128(const std::string& s) {
    if (s.empty()) {
        return std::nullopt;
    }
    constexpr u128 kMax = ~static_cast<u128>(0);
    u128 value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        const auto digit = static_cast<u128>(c - '0');
        if (value > (kMax - digit) / 10) {
            return std::nullopt;
        }
        value = value * 10 + digit;
    }
    return value;
}

void AmountVector::set(const AssetId& asset, u128 amount) {
    if (amount == 0) {
        amounts_.erase(asset);
    } else {
        amounts_[asset] = amount;
    }
}

u128 AmountVector::get(const AssetId& asset) const {
    const auto it = amounts_.find(asset);
    return it == amounts_.end() ? 0 : it->second;
}

std::optional<AmountVector> AmountVector::checkedAdd(const AmountVector& a, const AmountVector& b) {
    AmountVector out = a;
    for (const auto& [asset, amount] : b.amounts_) {
        const u128 current = out.get(asset);
        const u128 sum = current + amount;
        if (sum < current) {
            return std::nullopt;
        }
        out.set(asset, sum);
    }
    return out;
}

std::optional<AmountVector> AmountVector::checkedSub(const AmountVector& a, const AmountVector& b) {
    AmountVector out = a;
    for (const auto& [asset, amount] : b.amounts_) {
        const u128 current = out.get(asset);
        if (current < amount) {
            return std::nullopt;
        }
        out.set(asset, current - amount);
    }
    return out;
}

} // namespace atlantis

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

#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>

#include "atlantis/proof_backend.hpp"

namespace atlantis {

using AccountId = std::string;

struct LedgerConfig {
    std::uint8_t treeDepth = 32;
    std::uint16_t rangeBitWidth = 128;
    BackendChoice backend = BackendChoice::SigmaRangeSimulation;
    AccountId admin = "admin";
    std::uint32_t rootWindow = 64; // accepted roots a proof may target
};

// What a transfer submits: the spend statement with its proof, plus one
// range proof per output commitment.
struct TransferPayload {
    SpendStatement spendStatement;
    Proof spendProof;
    std::vector<std::pair<Commitment, Proof>> outputs;
};

struct WithdrawPayload {
    WithdrawStatement statement; // includes destination account
    Proof proof;
};

struct DepositEntry {
    AmountVector amounts;
    GroupPoint P; // deposit public key sk*G
    std::optional<std::uint64_t> timelock;
};

// Full serializable ledger state; wire owns the byte format.
struct LedgerSnapshot {
    LedgerConfig config;
    std::vector<std::pair<AssetId, GroupPoint>> registry;
    std::vector<std::pair<std::uint32_t, Digest>> leaves;
    std::vector<Scalar> nullifiers;
    std::vector<Commitment> exclusions;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> timelocks;
    std::vector<std::pair<std::pair<AccountId, AssetId>, u128>> balances;
    std::uint64_t clock = 0;
    std::vector<Digest> rootHistory; // oldest first; back() is current
};

// The "contract": a serial state machine over the anonymity-set tree, the
// nullifier set, public balances, the exclusion list and deposit timelocks.
// Every mutating operation is atomic: a rejected payload leaves the state
// byte-identical.
class Ledger {
  public:
    explicit Ledger(LedgerConfig config = {});

    static Ledger fromSnapshot(const LedgerSnapshot& snapshot); // validates invariants
    [[nodiscard]] LedgerSnapshot snapshot() const;

    // --- mutations ---
    GroupPoint registerAsset(const AssetId& id);
    void fund(const AccountId& account, const AssetId& asset, u128 amount); // test faucet
    std::uint32_t deposit(const AccountId& account, const AmountVector& amounts,
                          const GroupPoint& P, std::optional<std::uint64_t> timelock = {});
    // All-or-nothing: one failing entry rejects the whole batch.
    std::vector<std::uint32_t> depositMany(const AccountId& account,
                                           std::span<const DepositEntry> entries);
    Digest applyTransfer(const TransferPayload& payload);
    void applyWithdraw(const WithdrawPayload& payload);
    void excludeCommitment(const AccountId& caller, const Commitment& c); // admin only
    void advanceClock(std::uint64_t to);                                  // monotone

    // --- queries ---
    [[nodiscard]] const LedgerConfig& config() const { return config_; }
    [[nodiscard]] const SparseMerkleTree& tree() const { return state_.tree; }
    [[nodiscard]] const Digest& root() const { return state_.tree.root(); }
    [[nodiscard]] const AssetRegistry& registry() const { return state_.registry; }
    [[nodiscard]] bool nullifierSeen(const Scalar& nullifier) const;
    [[nodiscard]] const std::set<Scalar>& nullifiers() const { return state_.nullifiers; }
    [[nodiscard]] const std::set<Commitment>& exclusions() const { return state_.exclusions; }
    [[nodiscard]] const std::map<std::uint32_t, std::uint64_t>& timelocks() const {
        return state_.timelocks;
    }
    [[nodiscard]] u128 balanceOf(const AccountId& account, const AssetId& asset) const;
    [[nodiscard]] const std::map<std::pair<AccountId, AssetId>, u128>& balances() const {
        return state_.balances;
    }
    [[nodiscard]] std::uint64_t clock() const { return state_.clock; }
    [[nodiscard]] const std::deque<Digest>& rootHistory() const { return state_.rootHistory; }
    [[nodiscard]] ProofSystem proofSystem() const { return ProofSystem{config_.backend}; }

  private:
    struct State {
        SparseMerkleTree tree{32};
        AssetRegistry registry;
        std::set<Scalar> nullifiers;
        std::set<Commitment> exclusions;
        std::map<std::uint32_t, std::uint64_t> timelocks;
        std::map<std::pair<AccountId, AssetId>, u128> balances;
        std::uint64_t clock = 0;
        std::deque<Digest> rootHistory;
    };

    void pushRoot(State& next) const;
    [[nodiscard]] bool rootRecent(const Digest& root) const;
    void checkWitnessSpendable(const std::vector<Commitment>& spent,
                               const std::vector<MerkleProof>& proofs) const;
    std::uint32_t insertDeposit(State& next, const AccountId& account, const DepositEntry& entry) const;

    LedgerConfig config_;
    State state_;
};

} // namespace atlantis

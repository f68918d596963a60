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

#include <memory>

#include "atlantis/ledger.hpp"
#include "atlantis/messages.hpp"

namespace atlantis {

// One unspent (or spent) note the wallet controls.
struct CoinRecord {
    Scalar sk;
    AmountVector amounts;
    Commitment commitment;
    std::uint32_t leafIndex = 0;
    bool spent = false;
    std::optional<std::uint64_t> timelock;
};

// Proof parameters the wallet must agree on with the ledger it talks to.
struct ProofPolicy {
    BackendChoice backend = BackendChoice::SigmaRangeSimulation;
    std::uint16_t rangeBitWidth = 128;
    std::uint8_t treeDepth = 32;
};

// Sender-side transfer session. Single use; nonces never leave it.
struct SenderSession {
    SessionId id{};
    std::vector<std::size_t> coinIndexes;
    std::vector<Scalar> inputNonces;
    Scalar changeNonce;
    AmountVector changeAmounts;
    std::vector<AmountVector> recipientAmounts;
    std::vector<Scalar> nullifiers; // sorted
    // Multi-recipient bookkeeping, filled by announceChallenge.
    bool announced = false;
    std::vector<TransferNonce> recipientNonces;
};

// Recipient-side state between the nonce phase and the partial phase of a
// multi-recipient session. Single use: answering two different challenges
// with one nonce would leak the key.
struct RecipientSession {
    SessionId id{};
    Scalar sk;
    Scalar nonce;
    AmountVector amounts;
    Commitment outputCommitment;
    std::vector<Scalar> nullifiers;
};

// Client-side key and coin management plus the interactive transfer session.
// A wallet instance is single-threaded.
class Wallet {
  public:
    explicit Wallet(std::shared_ptr<Rng> rng, ProofPolicy policy = {});

    // --- coins ---
    [[nodiscard]] const std::vector<CoinRecord>& coins() const { return coins_; }
    std::size_t addCoin(CoinRecord coin);
    void markSpentByNullifiers(std::span<const Scalar> nullifiers);
    [[nodiscard]] Scalar coinNullifier(std::size_t coinIndex) const;

    // --- deposits ---
    // Generates the deposit key pair; the ledger computes the commitment
    // from (amounts, P). recordDeposit stores the resulting coin.
    struct DepositKey {
        Scalar sk;
        GroupPoint P;
    };
    DepositKey prepareDeposit();
    std::size_t recordDeposit(const DepositKey& key, const AmountVector& amounts,
                              std::uint32_t leafIndex, std::optional<std::uint64_t> timelock = {});

    // --- transfer, sender side ---
    std::pair<SessionId, TransferInit> initiateTransfer(const std::vector<std::size_t>& coinIndexes,
                                                        const AmountVector& transferAmounts);
    std::pair<SessionId, std::vector<TransferInit>> initiateMultiTransfer(
        const std::vector<std::size_t>& coinIndexes,
        const std::vector<AmountVector>& perRecipient);
    // Multi-recipient phase 2: fix the aggregate nonce from the collected
    // recipient nonces and announce the common challenge input.
    ChallengeAnnounce announceChallenge(const SessionId& id,
                                        std::span<const TransferNonce> nonces);
    TransferPayload finalizeTransfer(const SessionId& id,
                                     std::span<const TransferResponse> responses,
                                     const Ledger& view);
    TransferPayload finalizeMultiTransfer(const SessionId& id,
                                          std::span<const TransferPartial> partials,
                                          const Ledger& view);
    void abandonSession(const SessionId& id);

    // --- transfer, recipient side ---
    // Single-recipient: one-shot response under the self-derivable challenge.
    TransferResponse respondTransfer(const TransferInit& m1);
    // Multi-recipient phase 1/2.
    TransferNonce prepareTransferResponse(const TransferInit& m1);
    std::vector<TransferPartial> completeTransferResponse(const ChallengeAnnounce& announce);

    // --- withdrawal ---
    WithdrawPayload buildWithdrawal(std::size_t coinIndex, const AccountId& destination,
                                    const Ledger& view);

    // --- persistence ---
    [[nodiscard]] const ProofPolicy& policy() const { return policy_; }
    [[nodiscard]] const std::vector<SenderSession>& senderSessions() const {
        return senderSessions_;
    }
    [[nodiscard]] const std::vector<RecipientSession>& recipientSessions() const {
        return recipientSessions_;
    }
    void restoreSenderSession(SenderSession session);
    void restoreRecipientSession(RecipientSession session);

  private:
    SenderSession& findSenderSession(const SessionId& id);
    void eraseSenderSession(const SessionId& id);
    SessionId freshSessionId();
    // Shared tail of initiate{,Multi}Transfer.
    std::pair<SessionId, std::vector<TransferInit>> startSession(
        const std::vector<std::size_t>& coinIndexes, const std::vector<AmountVector>& perRecipient);
    Proof proveRangeFor(const Commitment& c, const AmountVector& amounts, const Scalar& sk,
                        const std::vector<AssetId>& assets);
    TransferPayload assemblePayload(SenderSession& session,
                                    std::span<const TransferNonce> recipientData,
                                    std::span<const PartialSignature> recipientPartials,
                                    const Ledger& view);

    std::shared_ptr<Rng> rng_;
    ProofPolicy policy_;
    std::vector<CoinRecord> coins_;
    std::vector<SenderSession> senderSessions_;
    std::vector<RecipientSession> recipientSessions_;
};

} // namespace atlantis

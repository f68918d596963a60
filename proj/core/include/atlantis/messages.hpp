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

#include <array>

#include "atlantis/relations.hpp"

namespace atlantis {

// Random identifier correlating the messages of one transfer session.
using SessionId = std::array<std::uint8_t, 16>;

// M1, sender -> recipient. Carries everything a single recipient needs to
// respond in one step: the nullifiers to countersign, the amounts it will
// receive, and the sender's summed nonce commitment (inputs minus change)
// from which the common challenge derives.
struct TransferInit {
    SessionId sessionId{};
    std::vector<Scalar> nullifiers; // sorted, distinct
    AmountVector transferAmounts;
    GroupPoint senderNonceSum;
    std::uint32_t recipientCount = 1;
};

// M2, recipient -> sender (single-recipient sessions).
struct TransferResponse {
    SessionId sessionId{};
    Commitment outputCommitment;
    NonceCommitment recipientNonce;
    PartialSignature partial; // sign -1, under the session challenge
    Proof rangeProof;
};

// Multi-recipient sessions cannot produce partials in one step: every
// cosigner's challenge must bind the full aggregate nonce, which exists only
// after all recipients have committed a nonce. They therefore split M2 into
// a nonce phase and a partial phase:
//   M2a TransferNonce      recipient -> sender   (nonce + commitment + range proof)
//   M2b ChallengeAnnounce  sender -> recipients  (final aggregate nonce)
//   M2c TransferPartial    recipient -> sender   (partial under the common challenge)

struct TransferNonce {
    SessionId sessionId{};
    Commitment outputCommitment;
    NonceCommitment recipientNonce;
    Proof rangeProof;
};

struct ChallengeAnnounce {
    SessionId sessionId{};
    GroupPoint aggregateNonce;
};

struct TransferPartial {
    SessionId sessionId{};
    PartialSignature partial;
};

} // namespace atlantis

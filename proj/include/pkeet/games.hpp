// Copyright 2026 The pkeet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PKEET_GAMES_HPP_
#define PKEET_GAMES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkeet/pkeet.hpp"

// Executable security games.  Each game is a challenger-driven run against an
// adversary interface; the challenger owns all secrets, enforces the oracle
// rules, and records every step in a transcript whose verdict is
// recomputable from the recorded data.

namespace pkeet::games {

struct GameTranscript {
  std::string game;
  std::vector<std::string> events;
  std::size_t queries = 0;   // oracle calls, answered or refused
  std::size_t rejected = 0;  // oracle calls refused by the game's rule
  std::optional<int> challenge_bit;
  std::optional<int> guess_bit;
  std::string challenge_hex;  // recovery games: canonical challenge bytes
  std::string guess_hex;      // recovery games: canonical guess bytes
  bool aborted = false;
  bool win = false;

  void event(std::string line);
  // One event per line, then counters and the verdict; stable for diffing.
  std::string to_log() const;
  // Re-derives the verdict from recorded bits/values; equals `win`.
  bool recompute_win() const;
};

// Thrown on adversary protocol violations (queries after the game closed,
// malformed challenge plaintexts); the harness converts it into an aborted,
// losing transcript.
class GameAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Selective-tag game for the tag-based layer.  The adversary commits to a
// target tag before keys exist, then gets a decryption oracle that refuses
// the target tag in both phases and must tell which of its two plaintexts
// the challenge encrypts under that tag.

class TbeDecOracle {
 public:
  TbeDecOracle(const GroupParams& params, const tbe::DecKey& dk,
               const Scalar& target_tag, Rng& rng, GameTranscript& transcript);

  // nullopt iff tag equals the committed target.
  std::optional<GroupElement> query(const Scalar& tag,
                                    const tbe::Ciphertext& ct);
  void close();

 private:
  const GroupParams& params_;
  const tbe::DecKey& dk_;
  Scalar target_;
  Rng& rng_;
  GameTranscript& transcript_;
  bool open_ = true;
};

class TbeSelTagAdversary {
 public:
  virtual ~TbeSelTagAdversary() = default;
  virtual Scalar choose_target_tag(const GroupParams& params, Rng& rng) = 0;
  // leaked_dk is null in the real game; the harness can be told to leak it
  // to prove the game is winnable by a key holder (self-test only).
  virtual void receive_key(const tbe::EncKey& ek, const tbe::DecKey* leaked_dk) {
    (void)ek;
    (void)leaked_dk;
  }
  virtual std::pair<GroupElement, GroupElement> choose_challenge(
      TbeDecOracle& oracle, Rng& rng) = 0;
  virtual int guess(const tbe::Ciphertext& challenge, TbeDecOracle& oracle,
                    Rng& rng) = 0;
};

struct TbeGameOptions {
  bool leak_decryption_key = false;  // harness self-test hook
};

GameTranscript run_tbe_ind_seltag_wcca(TbeSelTagAdversary& adv,
                                       const GroupParams& params, Rng& rng,
                                       const TbeGameOptions& opts = {});

// ---------------------------------------------------------------------------
// Games against the full scheme.  One oracle serves both: full decryption,
// refusing only the challenge ciphertext itself once it exists.

class PkeetDecOracle {
 public:
  PkeetDecOracle(const PublicParams& pp, const DecKey& dk, Rng& rng,
                 GameTranscript& transcript);

  // nullopt when the query's canonical bytes equal the challenge's (only
  // possible post-challenge); honest rejections surface as nullopt too,
  // logged distinctly.
  std::optional<GroupElement> query(const Ciphertext& ct);
  void set_challenge(Bytes challenge_bytes);
  void close();

 private:
  const PublicParams& pp_;
  const DecKey& dk_;
  Rng& rng_;
  GameTranscript& transcript_;
  std::optional<Bytes> challenge_;
  bool open_ = true;
};

// Type-I insider: holds the trapdoor, must recover a random plaintext from
// the challenge ciphertext.
class OwCcaAdversary {
 public:
  virtual ~OwCcaAdversary() = default;
  virtual void receive_inputs(const PublicParams& pp, const EncKey& ek,
                              const Trapdoor& td) {
    (void)pp;
    (void)ek;
    (void)td;
  }
  virtual void pre_challenge(PkeetDecOracle& oracle, Rng& rng) {
    (void)oracle;
    (void)rng;
  }
  virtual GroupElement recover(const Ciphertext& challenge,
                               PkeetDecOracle& oracle, Rng& rng) = 0;
};

// challenge_space empty: the challenge plaintext is uniform over the group.
// Non-empty: uniform over the given list (for harness fixtures that
// demonstrate recovery when the plaintext space is small).
GameTranscript run_ow_cca_type1(OwCcaAdversary& adv, const PublicParams& pp,
                                Rng& rng,
                                const std::vector<GroupElement>& challenge_space = {});

// Type-II outsider: no trapdoor anywhere in the interface; must distinguish
// which of its two plaintexts the challenge encrypts.
class IndCcaAdversary {
 public:
  virtual ~IndCcaAdversary() = default;
  virtual void receive_inputs(const PublicParams& pp, const EncKey& ek) {
    (void)pp;
    (void)ek;
  }
  virtual std::pair<GroupElement, GroupElement> choose_challenge(
      PkeetDecOracle& oracle, Rng& rng) = 0;
  virtual int guess(const Ciphertext& challenge, PkeetDecOracle& oracle,
                    Rng& rng) = 0;
};

GameTranscript run_ind_cca_type2(IndCcaAdversary& adv, const PublicParams& pp,
                                 Rng& rng);

// ---------------------------------------------------------------------------
// Stock adversaries for calibration and harness validation.

// Baselines: ignore all inputs, guess uniformly.  Win rate must sit at 1/2
// (distinguishing games) or 1/|group| (recovery).
class CoinFlipTbeAdversary final : public TbeSelTagAdversary {
 public:
  Scalar choose_target_tag(const GroupParams& params, Rng& rng) override;
  std::pair<GroupElement, GroupElement> choose_challenge(TbeDecOracle& oracle,
                                                         Rng& rng) override;
  int guess(const tbe::Ciphertext& challenge, TbeDecOracle& oracle,
            Rng& rng) override;

 private:
  const GroupParams* params_ = nullptr;
};

class CoinFlipIndAdversary final : public IndCcaAdversary {
 public:
  void receive_inputs(const PublicParams& pp, const EncKey& ek) override;
  std::pair<GroupElement, GroupElement> choose_challenge(PkeetDecOracle& oracle,
                                                         Rng& rng) override;
  int guess(const Ciphertext& challenge, PkeetDecOracle& oracle,
            Rng& rng) override;

 private:
  const PublicParams* pp_ = nullptr;
};

class RandomGuessOwAdversary final : public OwCcaAdversary {
 public:
  void receive_inputs(const PublicParams& pp, const EncKey& ek,
                      const Trapdoor& td) override;
  GroupElement recover(const Ciphertext& challenge, PkeetDecOracle& oracle,
                       Rng& rng) override;

 private:
  const PublicParams* pp_ = nullptr;
};

// Probes the selective-tag rule: queries the target tag in both phases
// (expecting refusal) and a different tag (expecting an answer).
class TagProbeTbeAdversary final : public TbeSelTagAdversary {
 public:
  Scalar choose_target_tag(const GroupParams& params, Rng& rng) override;
  void receive_key(const tbe::EncKey& ek, const tbe::DecKey* leaked_dk) override;
  std::pair<GroupElement, GroupElement> choose_challenge(TbeDecOracle& oracle,
                                                         Rng& rng) override;
  int guess(const tbe::Ciphertext& challenge, TbeDecOracle& oracle,
            Rng& rng) override;

  int target_refusals = 0;  // target-tag queries answered with nullopt
  int target_probes = 0;    // target-tag queries sent
  int other_answers = 0;    // other-tag queries answered

 private:
  const GroupParams* params_ = nullptr;
  Scalar target_{};
  std::optional<tbe::EncKey> ek_;
};

// Wins whenever the harness (wrongly) leaks the decryption key: decrypts the
// challenge directly.  Run it with leak_decryption_key to validate that the
// game is sound, and without to confirm the leak is what made it win.
class LeakedKeyTbeAdversary final : public TbeSelTagAdversary {
 public:
  Scalar choose_target_tag(const GroupParams& params, Rng& rng) override;
  void receive_key(const tbe::EncKey& ek, const tbe::DecKey* leaked_dk) override;
  std::pair<GroupElement, GroupElement> choose_challenge(TbeDecOracle& oracle,
                                                         Rng& rng) override;
  int guess(const tbe::Ciphertext& challenge, TbeDecOracle& oracle,
            Rng& rng) override;

  bool saw_leak = false;

 private:
  const GroupParams* params_ = nullptr;
  std::optional<tbe::DecKey> dk_;
  Scalar target_{};
  GroupElement pt0_, pt1_;
};

// Probes the challenge-refusal rule of the full-scheme oracle: self-made
// ciphertexts must decrypt in both phases; the challenge must be refused.
class ReplayProbeIndAdversary final : public IndCcaAdversary {
 public:
  void receive_inputs(const PublicParams& pp, const EncKey& ek) override;
  std::pair<GroupElement, GroupElement> choose_challenge(PkeetDecOracle& oracle,
                                                         Rng& rng) override;
  int guess(const Ciphertext& challenge, PkeetDecOracle& oracle,
            Rng& rng) override;

  int self_answers = 0;        // own ciphertexts answered
  int challenge_refusals = 0;  // challenge replays refused
  int challenge_replays = 0;   // challenge replays sent

 private:
  const PublicParams* pp_ = nullptr;
  std::optional<EncKey> ek_;
};

// Same probe for the recovery game, where the oracle must answer everything
// pre-challenge and refuse exactly the challenge afterwards.
class ReplayProbeOwAdversary final : public OwCcaAdversary {
 public:
  void receive_inputs(const PublicParams& pp, const EncKey& ek,
                      const Trapdoor& td) override;
  void pre_challenge(PkeetDecOracle& oracle, Rng& rng) override;
  GroupElement recover(const Ciphertext& challenge, PkeetDecOracle& oracle,
                       Rng& rng) override;

  int pre_answers = 0;
  int challenge_refusals = 0;
  int challenge_replays = 0;

 private:
  const PublicParams* pp_ = nullptr;
  std::optional<EncKey> ek_;
};

// Harness fixture: when the challenge plaintext is drawn from a small known
// list, the trapdoor recovers it — open the challenge's cmp branch and match
// each candidate's hash.  Demonstrates why one-wayness needs a large space.
class SmallSpaceOwAdversary final : public OwCcaAdversary {
 public:
  explicit SmallSpaceOwAdversary(std::vector<GroupElement> space)
      : space_(std::move(space)) {}

  void receive_inputs(const PublicParams& pp, const EncKey& ek,
                      const Trapdoor& td) override;
  GroupElement recover(const Ciphertext& challenge, PkeetDecOracle& oracle,
                       Rng& rng) override;

 private:
  std::vector<GroupElement> space_;
  const PublicParams* pp_ = nullptr;
  std::optional<Trapdoor> td_;
};

}  // namespace pkeet::games

#endif  // PKEET_GAMES_HPP_

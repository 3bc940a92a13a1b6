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

#include "pkeet/games.hpp"

#include <sstream>

namespace pkeet::games {

namespace g = pkeet::group;

void GameTranscript::event(std::string line) {
  events.push_back(std::move(line));
}

std::string GameTranscript::to_log() const {
  std::ostringstream out;
  out << "game " << game << "\n";
  for (const std::string& e : events) out << e << "\n";
  out << "queries=" << queries << " rejected=" << rejected << "\n";
  if (challenge_bit) out << "challenge-bit=" << *challenge_bit << "\n";
  if (guess_bit) out << "guess-bit=" << *guess_bit << "\n";
  if (!challenge_hex.empty()) out << "challenge=" << challenge_hex << "\n";
  if (!guess_hex.empty()) out << "guess=" << guess_hex << "\n";
  out << "aborted=" << (aborted ? 1 : 0) << "\n";
  out << "win=" << (win ? 1 : 0) << "\n";
  return out.str();
}

bool GameTranscript::recompute_win() const {
  if (aborted) return false;
  if (challenge_bit && guess_bit) return *challenge_bit == *guess_bit;
  if (!challenge_hex.empty() && !guess_hex.empty()) {
    return challenge_hex == guess_hex;
  }
  return false;
}

namespace {

int coin(Rng& rng) {
  return rng.below(2) == 1 ? 1 : 0;
}

std::pair<GroupElement, GroupElement> distinct_random_pair(
    const GroupParams& params, Rng& rng) {
  GroupElement a = g::random_element(params, rng);
  GroupElement b = a;
  while (b == a) b = g::random_element(params, rng);
  return {a, b};
}

}  // namespace

// ---------------------------------------------------------------------------
// Selective-tag game.

TbeDecOracle::TbeDecOracle(const GroupParams& params, const tbe::DecKey& dk,
                           const Scalar& target_tag, Rng& rng,
                           GameTranscript& transcript)
    : params_(params),
      dk_(dk),
      target_(target_tag),
      rng_(rng),
      transcript_(transcript) {}

std::optional<GroupElement> TbeDecOracle::query(const Scalar& tag,
                                                const tbe::Ciphertext& ct) {
  if (!open_) throw GameAbort("oracle queried after the game closed");
  ++transcript_.queries;
  std::string hex = to_hex(g::scalar_to_bytes(params_, tag));
  if (tag == target_) {
    ++transcript_.rejected;
    transcript_.event("query tag=" + hex + " refused (target tag)");
    return std::nullopt;
  }
  transcript_.event("query tag=" + hex + " answered");
  return tbe::dec(params_, dk_, tag, ct, rng_);
}

void TbeDecOracle::close() {
  open_ = false;
}

GameTranscript run_tbe_ind_seltag_wcca(TbeSelTagAdversary& adv,
                                       const GroupParams& params, Rng& rng,
                                       const TbeGameOptions& opts) {
  GameTranscript t;
  t.game = "tbe-ind-seltag-wcca";
  try {
    Scalar target = adv.choose_target_tag(params, rng);
    if (target.value < 0 || target.value >= params.order) {
      throw GameAbort("target tag out of range");
    }
    t.event("commit target-tag=" + to_hex(g::scalar_to_bytes(params, target)));
    auto [ek, dk] = tbe::setup(params, rng);
    adv.receive_key(ek, opts.leak_decryption_key ? &dk : nullptr);
    t.event(opts.leak_decryption_key
                ? "key issued, decryption key leaked (harness self-test)"
                : "key issued");
    TbeDecOracle oracle(params, dk, target, rng, t);
    auto [pt0, pt1] = adv.choose_challenge(oracle, rng);
    if (!g::is_member(params, pt0.value) || !g::is_member(params, pt1.value)) {
      throw GameAbort("challenge plaintext not in the group");
    }
    int b = coin(rng);
    t.challenge_bit = b;
    tbe::Ciphertext star = tbe::enc(params, ek, target, b ? pt1 : pt0, rng);
    t.event("challenge issued under the target tag");
    int guess = adv.guess(star, oracle, rng) ? 1 : 0;
    oracle.close();
    t.guess_bit = guess;
    t.win = (guess == b);
  } catch (const GameAbort& e) {
    t.event(std::string("abort: ") + e.what());
    t.aborted = true;
    t.win = false;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Full-scheme oracle.

PkeetDecOracle::PkeetDecOracle(const PublicParams& pp, const DecKey& dk,
                               Rng& rng, GameTranscript& transcript)
    : pp_(pp), dk_(dk), rng_(rng), transcript_(transcript) {}

std::optional<GroupElement> PkeetDecOracle::query(const Ciphertext& ct) {
  if (!open_) throw GameAbort("oracle queried after the game closed");
  ++transcript_.queries;
  if (challenge_ && ciphertext_to_bytes(pp_, ct) == *challenge_) {
    ++transcript_.rejected;
    transcript_.event("query refused (challenge replay)");
    return std::nullopt;
  }
  std::optional<GroupElement> pt = dec(pp_, dk_, ct, rng_);
  transcript_.event(pt ? "query answered"
                       : "query answered (ciphertext rejected)");
  return pt;
}

void PkeetDecOracle::set_challenge(Bytes challenge_bytes) {
  challenge_ = std::move(challenge_bytes);
}

void PkeetDecOracle::close() {
  open_ = false;
}

GameTranscript run_ow_cca_type1(OwCcaAdversary& adv, const PublicParams& pp,
                                Rng& rng,
                                const std::vector<GroupElement>& challenge_space) {
  for (const GroupElement& e : challenge_space) {
    if (!g::is_member(pp.group, e.value)) {
      throw std::invalid_argument("challenge space contains a non-member");
    }
  }
  GameTranscript t;
  t.game = "pkeet-ow-cca-t1";
  try {
    auto [ek, dk] = kgen(pp, rng);
    Trapdoor td = tdgen(dk);
    adv.receive_inputs(pp, ek, td);
    t.event("keys issued, trapdoor included (insider game)");
    PkeetDecOracle oracle(pp, dk, rng, t);
    adv.pre_challenge(oracle, rng);
    GroupElement pt_star =
        challenge_space.empty()
            ? g::random_element(pp.group, rng)
            : challenge_space[mpz_get_ui(
                  rng.below(challenge_space.size()).get_mpz_t())];
    t.challenge_hex = to_hex(g::element_to_bytes(pp.group, pt_star));
    Ciphertext star = enc(pp, ek, pt_star, rng);
    oracle.set_challenge(ciphertext_to_bytes(pp, star));
    t.event("challenge issued");
    GroupElement guess = adv.recover(star, oracle, rng);
    oracle.close();
    if (g::is_member(pp.group, guess.value)) {
      t.guess_hex = to_hex(g::element_to_bytes(pp.group, guess));
      t.win = (guess == pt_star);
    } else {
      t.event("guess is not a group member");
      t.guess_hex = "invalid";
      t.win = false;
    }
  } catch (const GameAbort& e) {
    t.event(std::string("abort: ") + e.what());
    t.aborted = true;
    t.win = false;
  }
  return t;
}

GameTranscript run_ind_cca_type2(IndCcaAdversary& adv, const PublicParams& pp,
                                 Rng& rng) {
  GameTranscript t;
  t.game = "pkeet-ind-cca-t2";
  try {
    auto [ek, dk] = kgen(pp, rng);
    adv.receive_inputs(pp, ek);
    t.event("keys issued, trapdoor withheld (outsider game)");
    PkeetDecOracle oracle(pp, dk, rng, t);
    auto [pt0, pt1] = adv.choose_challenge(oracle, rng);
    if (!g::is_member(pp.group, pt0.value) ||
        !g::is_member(pp.group, pt1.value)) {
      throw GameAbort("challenge plaintext not in the group");
    }
    int b = coin(rng);
    t.challenge_bit = b;
    Ciphertext star = enc(pp, ek, b ? pt1 : pt0, rng);
    oracle.set_challenge(ciphertext_to_bytes(pp, star));
    t.event("challenge issued");
    int guess = adv.guess(star, oracle, rng) ? 1 : 0;
    oracle.close();
    t.guess_bit = guess;
    t.win = (guess == b);
  } catch (const GameAbort& e) {
    t.event(std::string("abort: ") + e.what());
    t.aborted = true;
    t.win = false;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Stock adversaries.

Scalar CoinFlipTbeAdversary::choose_target_tag(const GroupParams& params,
                                               Rng& rng) {
  params_ = &params;
  return g::random_scalar(params, rng);
}

std::pair<GroupElement, GroupElement> CoinFlipTbeAdversary::choose_challenge(
    TbeDecOracle& oracle, Rng& rng) {
  (void)oracle;
  return distinct_random_pair(*params_, rng);
}

int CoinFlipTbeAdversary::guess(const tbe::Ciphertext& challenge,
                                TbeDecOracle& oracle, Rng& rng) {
  (void)challenge;
  (void)oracle;
  return coin(rng);
}

void CoinFlipIndAdversary::receive_inputs(const PublicParams& pp,
                                          const EncKey& ek) {
  (void)ek;
  pp_ = &pp;
}

std::pair<GroupElement, GroupElement> CoinFlipIndAdversary::choose_challenge(
    PkeetDecOracle& oracle, Rng& rng) {
  (void)oracle;
  return distinct_random_pair(pp_->group, rng);
}

int CoinFlipIndAdversary::guess(const Ciphertext& challenge,
                                PkeetDecOracle& oracle, Rng& rng) {
  (void)challenge;
  (void)oracle;
  return coin(rng);
}

void RandomGuessOwAdversary::receive_inputs(const PublicParams& pp,
                                            const EncKey& ek,
                                            const Trapdoor& td) {
  (void)ek;
  (void)td;
  pp_ = &pp;
}

GroupElement RandomGuessOwAdversary::recover(const Ciphertext& challenge,
                                             PkeetDecOracle& oracle, Rng& rng) {
  (void)challenge;
  (void)oracle;
  return g::random_element(pp_->group, rng);
}

Scalar TagProbeTbeAdversary::choose_target_tag(const GroupParams& params,
                                               Rng& rng) {
  params_ = &params;
  target_ = g::random_scalar(params, rng);
  return target_;
}

void TagProbeTbeAdversary::receive_key(const tbe::EncKey& ek,
                                       const tbe::DecKey* leaked_dk) {
  (void)leaked_dk;
  ek_ = ek;
}

std::pair<GroupElement, GroupElement> TagProbeTbeAdversary::choose_challenge(
    TbeDecOracle& oracle, Rng& rng) {
  // The adversary may encrypt under the target tag itself, but the oracle
  // must still refuse to decrypt it.
  GroupElement pt = g::random_element(*params_, rng);
  tbe::Ciphertext under_target = tbe::enc(*params_, *ek_, target_, pt, rng);
  ++target_probes;
  if (!oracle.query(target_, under_target)) ++target_refusals;
  Scalar other = target_;
  while (other == target_) other = g::random_scalar(*params_, rng);
  tbe::Ciphertext under_other = tbe::enc(*params_, *ek_, other, pt, rng);
  auto answer = oracle.query(other, under_other);
  if (answer && *answer == pt) ++other_answers;
  return distinct_random_pair(*params_, rng);
}

int TagProbeTbeAdversary::guess(const tbe::Ciphertext& challenge,
                                TbeDecOracle& oracle, Rng& rng) {
  (void)rng;
  ++target_probes;
  if (!oracle.query(target_, challenge)) ++target_refusals;
  return 0;
}

Scalar LeakedKeyTbeAdversary::choose_target_tag(const GroupParams& params,
                                                Rng& rng) {
  params_ = &params;
  target_ = g::random_scalar(params, rng);
  return target_;
}

void LeakedKeyTbeAdversary::receive_key(const tbe::EncKey& ek,
                                        const tbe::DecKey* leaked_dk) {
  (void)ek;
  if (leaked_dk != nullptr) {
    dk_ = *leaked_dk;
    saw_leak = true;
  }
}

std::pair<GroupElement, GroupElement> LeakedKeyTbeAdversary::choose_challenge(
    TbeDecOracle& oracle, Rng& rng) {
  (void)oracle;
  auto [pt0, pt1] = distinct_random_pair(*params_, rng);
  pt0_ = pt0;
  pt1_ = pt1;
  return {pt0, pt1};
}

int LeakedKeyTbeAdversary::guess(const tbe::Ciphertext& challenge,
                                 TbeDecOracle& oracle, Rng& rng) {
  (void)oracle;
  if (!dk_) return coin(rng);
  GroupElement pt = tbe::dec(*params_, *dk_, target_, challenge, rng);
  return pt == pt1_ ? 1 : 0;
}

void ReplayProbeIndAdversary::receive_inputs(const PublicParams& pp,
                                             const EncKey& ek) {
  pp_ = &pp;
  ek_ = ek;
}

std::pair<GroupElement, GroupElement> ReplayProbeIndAdversary::choose_challenge(
    PkeetDecOracle& oracle, Rng& rng) {
  GroupElement pt = g::random_element(pp_->group, rng);
  auto answer = oracle.query(enc(*pp_, *ek_, pt, rng));
  if (answer && *answer == pt) ++self_answers;
  return distinct_random_pair(pp_->group, rng);
}

int ReplayProbeIndAdversary::guess(const Ciphertext& challenge,
                                   PkeetDecOracle& oracle, Rng& rng) {
  ++challenge_replays;
  if (!oracle.query(challenge)) ++challenge_refusals;
  // Fresh ciphertexts must still be answered post-challenge.
  GroupElement pt = g::random_element(pp_->group, rng);
  auto answer = oracle.query(enc(*pp_, *ek_, pt, rng));
  if (answer && *answer == pt) ++self_answers;
  return coin(rng);
}

void ReplayProbeOwAdversary::receive_inputs(const PublicParams& pp,
                                            const EncKey& ek,
                                            const Trapdoor& td) {
  (void)td;
  pp_ = &pp;
  ek_ = ek;
}

void ReplayProbeOwAdversary::pre_challenge(PkeetDecOracle& oracle, Rng& rng) {
  GroupElement pt = g::random_element(pp_->group, rng);
  auto answer = oracle.query(enc(*pp_, *ek_, pt, rng));
  if (answer && *answer == pt) ++pre_answers;
}

GroupElement ReplayProbeOwAdversary::recover(const Ciphertext& challenge,
                                             PkeetDecOracle& oracle, Rng& rng) {
  ++challenge_replays;
  if (!oracle.query(challenge)) ++challenge_refusals;
  return g::random_element(pp_->group, rng);
}

void SmallSpaceOwAdversary::receive_inputs(const PublicParams& pp,
                                           const EncKey& ek,
                                           const Trapdoor& td) {
  (void)ek;
  pp_ = &pp;
  td_ = td;
}

GroupElement SmallSpaceOwAdversary::recover(const Ciphertext& challenge,
                                            PkeetDecOracle& oracle, Rng& rng) {
  (void)oracle;
  // The trapdoor opens the cmp branch to the plaintext's group hash; with a
  // small candidate list that pins the plaintext exactly.
  Scalar tag = tag_for(*pp_, challenge.vk);
  GroupElement h = tbe::dec(pp_->group, td_->cmp, tag, challenge.cmp_ct, rng);
  for (const GroupElement& cand : space_) {
    if (hash_plaintext(*pp_, cand) == h) return cand;
  }
  return g::random_element(pp_->group, rng);
}

}  // namespace pkeet::games

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bioibe/attack.hpp"
#include "bioibe/scheme.hpp"

namespace bioibe {

// One side of the selective-identity chosen-plaintext game. The challenger
// drives the phases in order: choose_target (Init), receive_params (Setup),
// key queries in two phases, choose_messages / receive_challenge
// (Challenge), then guess.
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual AttributeSet choose_target(const SchemeConfig& config, Rng& rng) = 0;
  virtual void receive_params(const PublicParams& pp) = 0;

  // Key extraction queries for the given phase (1 or 2). The challenger
  // answers each via receive_key, or on_query_rejected when the query
  // violates the overlap restriction.
  virtual std::vector<AttributeSet> key_queries(int phase, Rng& rng) = 0;
  virtual void receive_key(const SecretKey& sk, const SketchPar& par) = 0;
  virtual void on_query_rejected(const AttributeSet& w) = 0;

  // Two equal-length messages; the challenger encrypts one of them.
  virtual std::pair<GtElem, GtElem> choose_messages(Rng& rng) = 0;
  virtual void receive_challenge(const Ciphertext& ct) = 0;

  virtual int guess(Rng& rng) = 0;

  // The plaintext the adversary believes it recovered, when its strategy
  // produces one; lets the challenger log recovered-equals-m_b per trial.
  virtual std::optional<GtElem> recovered_plaintext() const { return std::nullopt; }
};

struct TrialRecord {
  int b = 0;
  int b_guess = 0;
  std::optional<bool> recovered_equals_mb;
  std::uint32_t rejected_queries = 0;
};

struct GameResult {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double advantage = 0.0;  // |wins/trials - 1/2|, 0 when trials == 0
  std::vector<TrialRecord> records;
};

// Plays `trials` independent games (fresh setup, fresh randomness per
// trial) and counts wins. Queries with |w' cap w_i| >= d are rejected, per
// the challenger contract; rejection is not a harness failure.
GameResult run_ind_sid_cpa_game(Adversary& adversary, std::uint64_t trials,
                                const SchemeConfig& config, Rng& rng);

// The concrete adversary that breaks the scheme: commits to a random
// target set, queries one key for a set overlapping the target in
// `overlap` (< d) attributes, then recovers the challenge plaintext with
// universal_decrypt and answers with certainty.
class UniversalDecryptAdversary final : public Adversary {
 public:
  explicit UniversalDecryptAdversary(std::uint32_t overlap = 0);

  AttributeSet choose_target(const SchemeConfig& config, Rng& rng) override;
  void receive_params(const PublicParams& pp) override;
  std::vector<AttributeSet> key_queries(int phase, Rng& rng) override;
  void receive_key(const SecretKey& sk, const SketchPar& par) override;
  void on_query_rejected(const AttributeSet& w) override;
  std::pair<GtElem, GtElem> choose_messages(Rng& rng) override;
  void receive_challenge(const Ciphertext& ct) override;
  int guess(Rng& rng) override;
  std::optional<GtElem> recovered_plaintext() const override;

  const std::optional<AttackTranscript>& last_transcript() const {
    return transcript_;
  }

 private:
  std::uint32_t overlap_;
  std::optional<AttributeSet> target_;
  std::optional<PublicParams> pp_;
  std::optional<SecretKey> key_;
  std::optional<std::pair<GtElem, GtElem>> messages_;
  std::optional<Ciphertext> challenge_;
  std::optional<AttackTranscript> transcript_;
};

// Baseline that ignores everything and flips a coin.
class RandomGuessAdversary final : public Adversary {
 public:
  AttributeSet choose_target(const SchemeConfig& config, Rng& rng) override;
  void receive_params(const PublicParams& pp) override { group_ = pp.group; }
  std::vector<AttributeSet> key_queries(int phase, Rng& rng) override { return {}; }
  void receive_key(const SecretKey& sk, const SketchPar& par) override {}
  void on_query_rejected(const AttributeSet& w) override {}
  std::pair<GtElem, GtElem> choose_messages(Rng& rng) override;
  void receive_challenge(const Ciphertext& ct) override {}
  int guess(Rng& rng) override { return rng.next_bit() ? 1 : 0; }

 private:
  std::shared_ptr<const PairingGroup> group_;
};

}  // namespace bioibe

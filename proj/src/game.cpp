#include "bioibe/game.hpp"

#include <cmath>
#include <stdexcept>

namespace bioibe {

GameResult run_ind_sid_cpa_game(Adversary& adversary, std::uint64_t trials,
                                const SchemeConfig& config, Rng& rng) {
  config.validate();
  GameResult result;
  result.trials = trials;
  result.records.reserve(trials);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng trial_rng = rng.fork();
    TrialRecord record;

    // Init: the adversary commits to the target attribute set.
    AttributeSet w_prime = adversary.choose_target(config, trial_rng);
    if (w_prime.size() != config.n)
      throw std::invalid_argument("game: target set has wrong cardinality");

    // Setup.
    auto [pp, msk] = setup(config, trial_rng);
    adversary.receive_params(pp);

    // Phase 1 and (after the challenge) Phase 2 extraction queries, with
    // the restriction |w' cap w_i| < d enforced by rejection.
    auto serve_queries = [&](int phase) {
      for (const auto& w_i : adversary.key_queries(phase, trial_rng)) {
        if (AttributeSet::intersection(w_prime, w_i).size() >= config.d) {
          record.rejected_queries += 1;
          adversary.on_query_rejected(w_i);
          continue;
        }
        ExtractResult extracted = extract(pp, msk, w_i, trial_rng);
        adversary.receive_key(extracted.key, extracted.par);
      }
    };
    serve_queries(1);

    // Challenge: encrypt m_b under the committed identity. Enrollment of
    // the target identity (Gen over its template) is public, so the
    // challenger runs it directly.
    auto [m0, m1] = adversary.choose_messages(trial_rng);
    const int b = trial_rng.next_bit() ? 1 : 0;
    GenResult enrollment =
        pp.extractor().gen(attrs_to_template(w_prime, pp.encoding));
    Ciphertext ct =
        encrypt(pp, b == 0 ? m0 : m1, w_prime, enrollment.par, trial_rng);
    adversary.receive_challenge(ct);

    serve_queries(2);

    // Guess.
    record.b = b;
    record.b_guess = adversary.guess(trial_rng);
    if (auto recovered = adversary.recovered_plaintext()) {
      const GtElem& m_b = b == 0 ? m0 : m1;
      record.recovered_equals_mb = (*recovered == m_b);
      if (*recovered != m0 && *recovered != m1)
        throw std::logic_error("game: recovered plaintext is neither m0 nor m1");
    }
    if (record.b_guess == b) result.wins += 1;
    result.records.push_back(std::move(record));
  }

  result.advantage =
      trials == 0
          ? 0.0
          : std::abs(static_cast<double>(result.wins) / trials - 0.5);
  return result;
}

UniversalDecryptAdversary::UniversalDecryptAdversary(std::uint32_t overlap)
    : overlap_(overlap) {}

AttributeSet UniversalDecryptAdversary::choose_target(const SchemeConfig& config,
                                                      Rng& rng) {
  if (overlap_ >= config.d)
    throw std::invalid_argument(
        "UniversalDecryptAdversary: overlap must stay below the threshold");
  transcript_.reset();
  key_.reset();
  target_ = universe::random_set(config.encoding(), config.prime, rng);
  return *target_;
}

void UniversalDecryptAdversary::receive_params(const PublicParams& pp) {
  pp_ = pp;
}

std::vector<AttributeSet> UniversalDecryptAdversary::key_queries(int phase,
                                                                 Rng& rng) {
  if (phase != 1) return {};  // Phase 2 issues no query
  AttributeSet w = universe::random_set_with_overlap(
      pp_->encoding, pp_->group->order(), rng, *target_, overlap_);
  return {w};
}

void UniversalDecryptAdversary::receive_key(const SecretKey& sk,
                                            const SketchPar&) {
  key_ = sk;
}

void UniversalDecryptAdversary::on_query_rejected(const AttributeSet&) {
  throw std::logic_error(
      "UniversalDecryptAdversary: query rejected; overlap restriction violated");
}

std::pair<GtElem, GtElem> UniversalDecryptAdversary::choose_messages(Rng& rng) {
  GtElem m0 = pp_->group->random_target_element(rng);
  GtElem m1 = pp_->group->random_target_element(rng);
  while (m1 == m0) m1 = pp_->group->random_target_element(rng);
  messages_ = {m0, m1};
  return *messages_;
}

void UniversalDecryptAdversary::receive_challenge(const Ciphertext& ct) {
  challenge_ = ct;
}

int UniversalDecryptAdversary::guess(Rng&) {
  if (!pp_ || !key_ || !challenge_ || !messages_)
    throw std::logic_error("UniversalDecryptAdversary: game phases incomplete");
  transcript_ = universal_decrypt(*pp_, *key_, *challenge_);
  return transcript_->recovered == messages_->first ? 0 : 1;
}

std::optional<GtElem> UniversalDecryptAdversary::recovered_plaintext() const {
  if (!transcript_) return std::nullopt;
  return transcript_->recovered;
}

AttributeSet RandomGuessAdversary::choose_target(const SchemeConfig& config,
                                                 Rng& rng) {
  return universe::random_set(config.encoding(), config.prime, rng);
}

std::pair<GtElem, GtElem> RandomGuessAdversary::choose_messages(Rng& rng) {
  GtElem m0 = group_->random_target_element(rng);
  GtElem m1 = group_->random_target_element(rng);
  while (m1 == m0) m1 = group_->random_target_element(rng);
  return {m0, m1};
}

}  // namespace bioibe

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bioibe/attack.hpp"
#include "bioibe/fuzzy_extractor.hpp"
#include "bioibe/game.hpp"
#include "bioibe/scheme.hpp"

namespace bioibe {

// Raised for unreadable/unwritable files; format violations raise
// std::invalid_argument instead.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- canonical byte forms -------------------------------------------------

// Scalars serialize big-endian, zero-padded to the modulus width.
std::size_t scalar_width(const Int& p);
std::vector<std::uint8_t> canonical_bytes(const Scalar& s);
std::string to_hex(const Scalar& s);
Scalar scalar_from_hex(const std::string& hex, const Int& p);

// Attribute sets serialize as the sorted concatenation of their scalars.
std::vector<std::uint8_t> canonical_bytes(const AttributeSet& w);

// Group elements carry a backend tag byte before the representation.
std::vector<std::uint8_t> canonical_bytes(const GElem& e);
std::vector<std::uint8_t> canonical_bytes(const GtElem& e);
std::string to_hex(const GElem& e);
std::string to_hex(const GtElem& e);
GElem g_elem_from_hex(const std::string& hex,
                      const std::shared_ptr<const PairingGroup>& group);
GtElem gt_elem_from_hex(const std::string& hex,
                        const std::shared_ptr<const PairingGroup>& group);

// SketchPar blob: version byte, k, t, block width (u32 big-endian each),
// then the packed offset bits.
std::vector<std::uint8_t> sketch_to_blob(const SketchPar& par);
SketchPar sketch_from_blob(std::span<const std::uint8_t> blob);

std::string bytes_to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> hex_to_bytes(const std::string& hex);

// ---- JSON payloads ---------------------------------------------------------

nlohmann::json to_json(const PublicParams& pp);
PublicParams public_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MasterKey& msk, const Int& prime);
MasterKey master_key_from_json(const nlohmann::json& j, const Int& expected_prime);

nlohmann::json to_json(const SecretKey& sk);
SecretKey secret_key_from_json(const nlohmann::json& j, const PublicParams& pp);

nlohmann::json to_json(const SketchPar& par);
SketchPar sketch_par_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Ciphertext& ct);
Ciphertext ciphertext_from_json(const nlohmann::json& j, const PublicParams& pp);

nlohmann::json to_json(const AttackTranscript& t);
nlohmann::json to_json(const GameResult& r);

// ---- keystore envelopes ----------------------------------------------------

inline constexpr int kRecordVersion = 1;

// {"role", "version", "payload", optional "metadata": {"seed"}} rendered
// with sorted keys and a trailing newline, so equal records are equal bytes.
std::string envelope_string(const std::string& role, nlohmann::json payload,
                            std::optional<std::uint64_t> seed = std::nullopt);
nlohmann::json open_envelope(const std::string& text,
                             const std::string& expected_role);

void write_envelope_file(const std::filesystem::path& path,
                         const std::string& role, nlohmann::json payload,
                         std::optional<std::uint64_t> seed = std::nullopt,
                         bool overwrite = false,
                         bool restrict_permissions = false);
nlohmann::json read_envelope_file(const std::filesystem::path& path,
                                  const std::string& expected_role);

inline constexpr const char* kRolePublicParams = "public-params";
inline constexpr const char* kRoleMasterKey = "master-key";
inline constexpr const char* kRoleSecretKey = "secret-key";
inline constexpr const char* kRoleSketchPar = "sketch-par";
inline constexpr const char* kRoleCiphertext = "ciphertext";

}  // namespace bioibe

// bioibe: command-line front end for the Bio-IBE scheme, the universal
// decryption attack, and the selective-identity CPA game harness.
//
// Exit codes: 0 success, 2 configuration/argument error, 3 cryptographic
// refusal or check failure (insufficient overlap, bad tag, failed
// consistency), 4 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bioibe/attack.hpp"
#include "bioibe/game.hpp"
#include "bioibe/hybrid.hpp"
#include "bioibe/primes.hpp"
#include "bioibe/serialize.hpp"

namespace {

using namespace bioibe;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitIo = 4;

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  return seed ? Rng(*seed) : Rng::from_entropy();
}

std::vector<Scalar> parse_attr_values(const std::vector<std::string>& items,
                                      const Int& p) {
  std::vector<Scalar> out;
  out.reserve(items.size());
  for (const auto& item : items) {
    Int v;
    try {
      v = Int(item);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("attribute is not a number: " + item);
    }
    if (v <= 0 || v >= p)
      throw std::invalid_argument("attribute out of range: " + item);
    out.emplace_back(v, p);
  }
  return out;
}

PublicParams load_pp(const std::filesystem::path& path) {
  return public_params_from_json(
      read_envelope_file(path, kRolePublicParams).at("payload"));
}

MasterKey load_msk(const std::filesystem::path& path, const PublicParams& pp) {
  return master_key_from_json(read_envelope_file(path, kRoleMasterKey).at("payload"),
                              pp.group->order());
}

SecretKey load_key(const std::filesystem::path& path, const PublicParams& pp) {
  return secret_key_from_json(read_envelope_file(path, kRoleSecretKey).at("payload"),
                              pp);
}

SketchPar load_par(const std::filesystem::path& path) {
  return sketch_par_from_json(read_envelope_file(path, kRoleSketchPar).at("payload"));
}

struct StoredCiphertext {
  std::string mode;  // "raw" or "hybrid"
  Ciphertext kem;
  std::vector<std::uint8_t> body;
  Digest tag{};
};

StoredCiphertext load_ct(const std::filesystem::path& path, const PublicParams& pp) {
  json payload = read_envelope_file(path, kRoleCiphertext).at("payload");
  StoredCiphertext out{payload.at("mode").get<std::string>(),
                       ciphertext_from_json(payload.at("kem"), pp),
                       {},
                       {}};
  if (out.mode == "hybrid") {
    out.body = hex_to_bytes(payload.at("dem_body").get<std::string>());
    auto tag = hex_to_bytes(payload.at("dem_tag").get<std::string>());
    if (tag.size() != out.tag.size())
      throw std::invalid_argument("ciphertext has malformed dem_tag");
    std::copy(tag.begin(), tag.end(), out.tag.begin());
  } else if (out.mode != "raw") {
    throw std::invalid_argument("unknown ciphertext mode: " + out.mode);
  }
  return out;
}

std::vector<std::uint8_t> read_payload_bytes(const std::string& message,
                                             const std::string& in_path) {
  if (!in_path.empty()) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + in_path + " for reading");
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
  }
  return std::vector<std::uint8_t>(message.begin(), message.end());
}

void write_output_bytes(const std::string& out_path,
                        std::span<const std::uint8_t> bytes) {
  if (out_path.empty() || out_path == "-") {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + out_path);
}

// ---- setup ------------------------------------------------------------------

struct SetupArgs {
  std::uint32_t n = 8;
  std::uint32_t d = 4;
  std::string prime = "secp256k1";
  std::uint32_t slot_bits = 32;
  std::uint32_t value_bits = 16;
  std::string binding = "identity-only";
  std::optional<std::uint64_t> seed;
  std::string out_pp = "pp.json";
  std::string out_msk = "msk.json";
  bool force = false;
};

int cmd_setup(const SetupArgs& args) {
  SchemeConfig config;
  config.prime = primes::parse(args.prime);
  config.n = args.n;
  config.d = args.d;
  config.slot_bits = args.slot_bits;
  config.value_bits = args.value_bits;
  config.binding = args.binding == "identity-only"
                       ? Binding::IdentityOnly
                       : Binding::AttributesAndIdentity;
  config.validate();

  Rng rng = make_rng(args.seed);
  auto [pp, msk] = setup(config, rng);
  write_envelope_file(args.out_pp, kRolePublicParams, to_json(pp), args.seed,
                      args.force);
  write_envelope_file(args.out_msk, kRoleMasterKey,
                      to_json(msk, config.prime), args.seed, args.force,
                      /*restrict_permissions=*/true);
  std::cout << "wrote " << args.out_pp << " and " << args.out_msk << " (prime "
            << primes::describe(config.prime) << ", n=" << pp.n
            << ", d=" << pp.d << ")\n";
  return kExitOk;
}

// ---- extract ----------------------------------------------------------------

struct ExtractArgs {
  std::string pp_path = "pp.json";
  std::string msk_path = "msk.json";
  std::vector<std::string> attrs;
  std::optional<std::uint64_t> seed;
  std::string out_key = "key.json";
  std::string out_par = "par.json";
  bool force = false;
};

int cmd_extract(const ExtractArgs& args) {
  PublicParams pp = load_pp(args.pp_path);
  MasterKey msk = load_msk(args.msk_path, pp);
  AttributeSet w = AttributeSet::from_values(
      parse_attr_values(args.attrs, pp.group->order()));
  if (w.size() != pp.n)
    throw std::invalid_argument("expected " + std::to_string(pp.n) +
                                " attributes, got " + std::to_string(w.size()));

  Rng rng = make_rng(args.seed);
  ExtractResult extracted = extract(pp, msk, w, rng);
  write_envelope_file(args.out_key, kRoleSecretKey, to_json(extracted.key),
                      args.seed, args.force, /*restrict_permissions=*/true);
  write_envelope_file(args.out_par, kRoleSketchPar, to_json(extracted.par),
                      args.seed, args.force);
  std::cout << "wrote " << args.out_key << " and " << args.out_par
            << " (identity " << extracted.key.identity.hex().substr(0, 16)
            << "...)\n";
  return kExitOk;
}

// ---- encrypt / decrypt --------------------------------------------------------

struct EncryptArgs {
  std::string pp_path = "pp.json";
  std::string par_path = "par.json";
  std::vector<std::string> attrs;
  std::string message;
  std::string in_path;
  std::string raw_gt;
  std::optional<std::uint64_t> seed;
  std::string out_ct = "ct.json";
  bool force = false;
};

int cmd_encrypt(const EncryptArgs& args) {
  PublicParams pp = load_pp(args.pp_path);
  SketchPar par = load_par(args.par_path);
  AttributeSet w_prime = AttributeSet::from_values(
      parse_attr_values(args.attrs, pp.group->order()));
  Rng rng = make_rng(args.seed);

  json payload;
  if (!args.raw_gt.empty()) {
    GtElem m = gt_elem_from_hex(args.raw_gt, pp.group);
    Ciphertext ct = encrypt(pp, m, w_prime, par, rng);
    payload = json{{"mode", "raw"}, {"kem", to_json(ct)}};
  } else {
    auto bytes = read_payload_bytes(args.message, args.in_path);
    HybridCiphertext ct = hybrid_encrypt(pp, w_prime, par, bytes, rng);
    payload = json{{"mode", "hybrid"},
                   {"kem", to_json(ct.kem)},
                   {"dem_body", bytes_to_hex(ct.body)},
                   {"dem_tag", bytes_to_hex(ct.tag)}};
  }
  write_envelope_file(args.out_ct, kRoleCiphertext, std::move(payload),
                      args.seed, args.force);
  std::cout << "wrote " << args.out_ct << "\n";
  return kExitOk;
}

struct DecryptArgs {
  std::string pp_path = "pp.json";
  std::string key_path = "key.json";
  std::string ct_path = "ct.json";
  std::string out_path;
};

int cmd_decrypt(const DecryptArgs& args) {
  PublicParams pp = load_pp(args.pp_path);
  SecretKey key = load_key(args.key_path, pp);
  StoredCiphertext stored = load_ct(args.ct_path, pp);

  if (stored.mode == "raw") {
    GtElem m = decrypt(pp, key, stored.kem);
    std::cout << to_hex(m) << "\n";
    return kExitOk;
  }
  GtElem kem_element = decrypt(pp, key, stored.kem);
  auto payload = hybrid_open(kem_element, HybridCiphertext{stored.kem, stored.body,
                                                           stored.tag});
  write_output_bytes(args.out_path, payload);
  return kExitOk;
}

// ---- attack -------------------------------------------------------------------

struct AttackArgs {
  std::string pp_path = "pp.json";
  std::string key_path = "key.json";
  std::string ct_path = "ct.json";
  std::string out_path;
  std::string transcript_path;
};

int cmd_attack(const AttackArgs& args) {
  PublicParams pp = load_pp(args.pp_path);
  SecretKey key = load_key(args.key_path, pp);
  StoredCiphertext stored = load_ct(args.ct_path, pp);

  AttackTranscript transcript = universal_decrypt(pp, key, stored.kem);
  const std::size_t overlap =
      AttributeSet::intersection(transcript.queried_w, transcript.target_w_prime)
          .size();
  std::cerr << "attack: key/ciphertext attribute overlap is " << overlap
            << " (threshold " << pp.d << "); recovery proceeds regardless\n";

  if (!args.transcript_path.empty()) {
    write_envelope_file(args.transcript_path, "attack-transcript",
                        to_json(transcript), std::nullopt, /*overwrite=*/true);
  }
  if (stored.mode == "raw") {
    std::cout << to_hex(transcript.recovered) << "\n";
    return kExitOk;
  }
  auto payload = hybrid_open(
      transcript.recovered, HybridCiphertext{stored.kem, stored.body, stored.tag});
  write_output_bytes(args.out_path, payload);
  return kExitOk;
}

// ---- game ----------------------------------------------------------------------

struct GameArgs {
  std::uint64_t trials = 100;
  std::string adversary = "paper";
  std::uint32_t overlap = 0;
  std::uint32_t n = 8;
  std::uint32_t d = 4;
  std::string prime = "secp256k1";
  std::uint32_t slot_bits = 32;
  std::uint32_t value_bits = 16;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

int cmd_game(const GameArgs& args) {
  SchemeConfig config;
  config.prime = primes::parse(args.prime);
  config.n = args.n;
  config.d = args.d;
  config.slot_bits = args.slot_bits;
  config.value_bits = args.value_bits;
  config.validate();

  Rng rng = make_rng(args.seed);
  GameResult result;
  if (args.adversary == "paper") {
    UniversalDecryptAdversary adversary(args.overlap);
    result = run_ind_sid_cpa_game(adversary, args.trials, config, rng);
  } else if (args.adversary == "random") {
    RandomGuessAdversary adversary;
    result = run_ind_sid_cpa_game(adversary, args.trials, config, rng);
  } else {
    throw std::invalid_argument("unknown adversary: " + args.adversary);
  }

  json report = to_json(result);
  report["adversary"] = args.adversary;
  std::string text = report.dump(2) + "\n";
  if (args.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + args.out_path + " for writing");
    out << text;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string pp_path = "pp.json";
  std::string key_path;
  std::string ct_path;
  std::string par_path;
};

int cmd_verify(const VerifyArgs& args) {
  PublicParams pp = load_pp(args.pp_path);
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    all_ok = all_ok && ok;
  };

  report("public params: 1 <= d <= n", pp.d >= 1 && pp.d <= pp.n);

  if (!args.key_path.empty()) {
    SecretKey key = load_key(args.key_path, pp);
    AttributeSet w = key.attribute_set();
    Scalar h = binding_hash(pp, key.identity, w);
    GElem base = pp.g1 * pp.g.pow(h);

    bool pairing_ok = true;
    for (const auto& share : key.shares)
      pairing_ok = pairing_ok && pp.group->pair(share.d2, base) ==
                                     pp.group->pair(share.d1, pp.g);
    report("secret key: e(d2, g1*g^H1) == e(d1, g) for every share", pairing_ok);

    // Interpolating any d shares of d2 at 0 must give g2. Check the first
    // window of subsets (all of them when n is small).
    bool interp_ok = true;
    if (key.shares.size() >= pp.d) {
      std::vector<std::pair<Scalar, GElem>> shares;
      for (std::uint32_t i = 0; i < pp.d; ++i)
        shares.emplace_back(key.shares[i].attr, key.shares[i].d2);
      interp_ok = interpolate_at_zero_in_exponent(shares) == pp.g2;
      for (std::size_t start = 1; start + pp.d <= key.shares.size(); ++start) {
        shares.clear();
        for (std::uint32_t i = 0; i < pp.d; ++i)
          shares.emplace_back(key.shares[start + i].attr,
                              key.shares[start + i].d2);
        interp_ok = interp_ok && interpolate_at_zero_in_exponent(shares) == pp.g2;
      }
    } else {
      interp_ok = false;
    }
    report("secret key: d2 shares interpolate to g2", interp_ok);
  }

  if (!args.ct_path.empty()) {
    StoredCiphertext stored = load_ct(args.ct_path, pp);
    if (args.par_path.empty())
      throw std::invalid_argument("--par is required to verify a ciphertext");
    SketchPar par = load_par(args.par_path);
    BitString b_prime = attrs_to_template(stored.kem.w_prime, pp.encoding);
    Identity id_prime = pp.extractor().rep(b_prime, par);
    Scalar h_prime = binding_hash(pp, id_prime, stored.kem.w_prime);
    bool dh_ok = pp.group->pair(stored.kem.c1, pp.g.pow(h_prime)) ==
                 pp.group->pair(stored.kem.c2, pp.g);
    report("ciphertext: e(C1, g^H1) == e(C2, g)", dh_ok);
  }

  return all_ok ? kExitOk : kExitRefused;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bio-IBE scheme, universal-decryption attack, and CPA game harness"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an ini file");

  SetupArgs setup_args;
  auto* setup_cmd = app.add_subcommand("setup", "Generate public params and master key");
  setup_cmd->add_option("--n", setup_args.n, "Attributes per identity");
  setup_cmd->add_option("--d", setup_args.d, "Decryption threshold");
  setup_cmd->add_option("--prime", setup_args.prime,
                        "Prime name (secp256k1, bls12-381) or literal");
  setup_cmd->add_option("--slot-bits", setup_args.slot_bits, "Template bits per attribute");
  setup_cmd->add_option("--value-bits", setup_args.value_bits, "Attribute value bits per slot");
  setup_cmd->add_option("--binding", setup_args.binding, "identity-only or attributes-and-identity")
      ->check(CLI::IsMember({"identity-only", "attributes-and-identity"}));
  setup_cmd->add_option("--seed", setup_args.seed, "Deterministic seed");
  setup_cmd->add_option("--out-pp", setup_args.out_pp, "Public params output path");
  setup_cmd->add_option("--out-msk", setup_args.out_msk, "Master key output path");
  setup_cmd->add_flag("--force", setup_args.force, "Overwrite existing files");

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Derive a user secret key and sketch");
  extract_cmd->add_option("--pp", extract_args.pp_path, "Public params file");
  extract_cmd->add_option("--msk", extract_args.msk_path, "Master key file");
  extract_cmd->add_option("--attrs", extract_args.attrs, "Attribute values (decimal)")
      ->required()
      ->delimiter(',');
  extract_cmd->add_option("--seed", extract_args.seed, "Deterministic seed");
  extract_cmd->add_option("--out-key", extract_args.out_key, "Secret key output path");
  extract_cmd->add_option("--out-par", extract_args.out_par, "Public sketch output path");
  extract_cmd->add_flag("--force", extract_args.force, "Overwrite existing files");

  EncryptArgs encrypt_args;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt to an attribute set");
  encrypt_cmd->add_option("--pp", encrypt_args.pp_path, "Public params file");
  encrypt_cmd->add_option("--par", encrypt_args.par_path, "Receiver sketch file");
  encrypt_cmd->add_option("--attrs", encrypt_args.attrs, "Receiver attribute values")
      ->required()
      ->delimiter(',');
  encrypt_cmd->add_option("--message", encrypt_args.message, "Payload string (hybrid mode)");
  encrypt_cmd->add_option("--in", encrypt_args.in_path, "Payload file (hybrid mode)");
  encrypt_cmd->add_option("--raw-gt", encrypt_args.raw_gt,
                          "Encrypt a literal target-group element (raw mode)");
  encrypt_cmd->add_option("--seed", encrypt_args.seed, "Deterministic seed");
  encrypt_cmd->add_option("--out", encrypt_args.out_ct, "Ciphertext output path");
  encrypt_cmd->add_flag("--force", encrypt_args.force, "Overwrite existing files");

  DecryptArgs decrypt_args;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Honest threshold decryption");
  decrypt_cmd->add_option("--pp", decrypt_args.pp_path, "Public params file");
  decrypt_cmd->add_option("--key", decrypt_args.key_path, "Secret key file");
  decrypt_cmd->add_option("--ct", decrypt_args.ct_path, "Ciphertext file");
  decrypt_cmd->add_option("--out", decrypt_args.out_path, "Payload output path (stdout default)");

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand(
      "attack", "Universal decryption with any valid key (no overlap needed)");
  attack_cmd->add_option("--pp", attack_args.pp_path, "Public params file");
  attack_cmd->add_option("--key", attack_args.key_path, "Secret key file");
  attack_cmd->add_option("--ct", attack_args.ct_path, "Ciphertext file");
  attack_cmd->add_option("--out", attack_args.out_path, "Payload output path (stdout default)");
  attack_cmd->add_option("--transcript", attack_args.transcript_path,
                         "Write the attack transcript to this file");

  GameArgs game_args;
  auto* game_cmd = app.add_subcommand("game", "Run the selective-identity CPA game");
  game_cmd->add_option("--trials", game_args.trials, "Number of independent games");
  game_cmd->add_option("--adversary", game_args.adversary, "paper or random")
      ->check(CLI::IsMember({"paper", "random"}));
  game_cmd->add_option("--overlap", game_args.overlap,
                       "Key-query overlap with the target (< d)");
  game_cmd->add_option("--n", game_args.n, "Attributes per identity");
  game_cmd->add_option("--d", game_args.d, "Decryption threshold");
  game_cmd->add_option("--prime", game_args.prime, "Prime name or literal");
  game_cmd->add_option("--slot-bits", game_args.slot_bits, "Template bits per attribute");
  game_cmd->add_option("--value-bits", game_args.value_bits, "Attribute value bits per slot");
  game_cmd->add_option("--seed", game_args.seed, "Deterministic seed");
  game_cmd->add_option("--out", game_args.out_path, "Report output path (stdout default)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check key/ciphertext consistency");
  verify_cmd->add_option("--pp", verify_args.pp_path, "Public params file");
  verify_cmd->add_option("--key", verify_args.key_path, "Secret key file");
  verify_cmd->add_option("--ct", verify_args.ct_path, "Ciphertext file");
  verify_cmd->add_option("--par", verify_args.par_path, "Receiver sketch file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (setup_cmd->parsed()) return cmd_setup(setup_args);
    if (extract_cmd->parsed()) return cmd_extract(extract_args);
    if (encrypt_cmd->parsed()) return cmd_encrypt(encrypt_args);
    if (decrypt_cmd->parsed()) return cmd_decrypt(decrypt_args);
    if (attack_cmd->parsed()) return cmd_attack(attack_args);
    if (game_cmd->parsed()) return cmd_game(game_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
  } catch (const InsufficientOverlap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const InsufficientShares& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const AuthenticationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "bioibe/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace bioibe {

using nlohmann::json;

// ---- canonical byte forms -------------------------------------------------

std::size_t scalar_width(const Int& p) { return byte_length(p); }

std::vector<std::uint8_t> canonical_bytes(const Scalar& s) {
  return int_to_be_bytes(s.value(), scalar_width(s.modulus()));
}

std::string to_hex(const Scalar& s) {
  return int_to_hex(s.value(), scalar_width(s.modulus()));
}

Scalar scalar_from_hex(const std::string& hex, const Int& p) {
  if (hex.size() != 2 * scalar_width(p))
    throw std::invalid_argument("scalar hex has wrong width");
  Int v = hex_to_int(hex);
  if (v >= p) throw std::invalid_argument("scalar out of range");
  return Scalar(v, p);
}

std::vector<std::uint8_t> canonical_bytes(const AttributeSet& w) {
  std::vector<std::uint8_t> out;
  for (const auto& v : w.values()) {
    auto b = canonical_bytes(v);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

namespace {

template <GroupSide Side>
std::vector<std::uint8_t> elem_bytes(const Elem<Side>& e) {
  std::vector<std::uint8_t> out;
  out.push_back(e.group()->repr_tag(Side));
  auto repr = int_to_be_bytes(e.repr(), scalar_width(e.group()->order()));
  out.insert(out.end(), repr.begin(), repr.end());
  return out;
}

template <GroupSide Side>
Int elem_repr_from_hex(const std::string& hex,
                       const std::shared_ptr<const PairingGroup>& group) {
  const std::size_t width = scalar_width(group->order());
  if (hex.size() != 2 * (width + 1))
    throw std::invalid_argument("group element hex has wrong width");
  auto bytes = hex_to_bytes(hex);
  if (bytes[0] != group->repr_tag(Side))
    throw std::invalid_argument("group element has wrong backend tag");
  return be_bytes_to_int(bytes.data() + 1, width);
}

}  // namespace

std::vector<std::uint8_t> canonical_bytes(const GElem& e) { return elem_bytes(e); }
std::vector<std::uint8_t> canonical_bytes(const GtElem& e) { return elem_bytes(e); }

std::string to_hex(const GElem& e) { return bytes_to_hex(elem_bytes(e)); }
std::string to_hex(const GtElem& e) { return bytes_to_hex(elem_bytes(e)); }

GElem g_elem_from_hex(const std::string& hex,
                      const std::shared_ptr<const PairingGroup>& group) {
  return group->element_from_repr(
      elem_repr_from_hex<GroupSide::Source>(hex, group));
}

GtElem gt_elem_from_hex(const std::string& hex,
                        const std::shared_ptr<const PairingGroup>& group) {
  return group->target_from_repr(
      elem_repr_from_hex<GroupSide::Target>(hex, group));
}

namespace {

constexpr std::uint8_t kSketchVersion = 0x01;

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return (std::uint32_t(b[at]) << 24) | (std::uint32_t(b[at + 1]) << 16) |
         (std::uint32_t(b[at + 2]) << 8) | std::uint32_t(b[at + 3]);
}

}  // namespace

std::vector<std::uint8_t> sketch_to_blob(const SketchPar& par) {
  std::vector<std::uint8_t> out;
  out.push_back(kSketchVersion);
  push_u32(out, static_cast<std::uint32_t>(par.offset.size()));
  push_u32(out, par.tolerance);
  push_u32(out, par.block_bits);
  out.insert(out.end(), par.offset.bytes().begin(), par.offset.bytes().end());
  return out;
}

SketchPar sketch_from_blob(std::span<const std::uint8_t> blob) {
  if (blob.size() < 13) throw std::invalid_argument("sketch blob truncated");
  if (blob[0] != kSketchVersion)
    throw std::invalid_argument("unsupported sketch blob version");
  const std::uint32_t k = read_u32(blob, 1);
  const std::uint32_t t = read_u32(blob, 5);
  const std::uint32_t block = read_u32(blob, 9);
  const std::size_t nbytes = (k + 7) / 8;
  if (blob.size() != 13 + nbytes)
    throw std::invalid_argument("sketch blob has wrong length");
  std::vector<std::uint8_t> packed(blob.begin() + 13, blob.end());
  return SketchPar{BitString::from_bytes(std::move(packed), k), t, block};
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> hex_to_bytes(const std::string& hex) {
  if (hex.size() % 2 != 0)
    throw std::invalid_argument("hex string has odd length");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) |
                                       nibble(hex[2 * i + 1]));
  return out;
}

// ---- JSON payloads ---------------------------------------------------------

namespace {

std::string binding_name(Binding b) {
  return b == Binding::IdentityOnly ? "identity-only" : "attributes-and-identity";
}

Binding binding_from_name(const std::string& name) {
  if (name == "identity-only") return Binding::IdentityOnly;
  if (name == "attributes-and-identity") return Binding::AttributesAndIdentity;
  throw std::invalid_argument("unknown binding mode: " + name);
}

std::string prime_hex(const Int& p) { return int_to_hex(p, byte_length(p)); }

Identity identity_from_hex(const std::string& hex) {
  auto bytes = hex_to_bytes(hex);
  Identity id;
  if (bytes.size() != id.id_bytes.size())
    throw std::invalid_argument("identity hex has wrong length");
  std::copy(bytes.begin(), bytes.end(), id.id_bytes.begin());
  return id;
}

}  // namespace

json to_json(const PublicParams& pp) {
  return json{{"backend", "transparent"},
              {"prime", prime_hex(pp.group->order())},
              {"n", pp.n},
              {"d", pp.d},
              {"binding", binding_name(pp.binding)},
              {"slot_bits", pp.encoding.slot_bits},
              {"value_bits", pp.encoding.value_bits},
              {"template_bits", pp.fuzzy.template_bits},
              {"tolerance", pp.fuzzy.tolerance},
              {"block_bits", pp.fuzzy.block_bits},
              {"g", to_hex(pp.g)},
              {"g1", to_hex(pp.g1)},
              {"g2", to_hex(pp.g2)}};
}

PublicParams public_params_from_json(const json& j) {
  if (j.at("backend").get<std::string>() != "transparent")
    throw std::invalid_argument("unsupported group backend");
  Int p = hex_to_int(j.at("prime").get<std::string>());
  auto group = TransparentPairing::create(p);

  AttributeEncoding enc{j.at("n").get<std::uint32_t>(),
                        j.at("slot_bits").get<std::uint32_t>(),
                        j.at("value_bits").get<std::uint32_t>()};
  FuzzyParams fuzzy{j.at("template_bits").get<std::uint32_t>(),
                    j.at("tolerance").get<std::uint32_t>(),
                    j.at("block_bits").get<std::uint32_t>()};
  enc.validate();
  fuzzy.validate();

  PublicParams pp{group,
                  g_elem_from_hex(j.at("g").get<std::string>(), group),
                  g_elem_from_hex(j.at("g1").get<std::string>(), group),
                  g_elem_from_hex(j.at("g2").get<std::string>(), group),
                  j.at("n").get<std::uint32_t>(),
                  j.at("d").get<std::uint32_t>(),
                  binding_from_name(j.at("binding").get<std::string>()),
                  enc,
                  fuzzy};
  if (pp.d < 1 || pp.d > pp.n)
    throw std::invalid_argument("public params violate 1 <= d <= n");
  return pp;
}

json to_json(const MasterKey& msk, const Int& prime) {
  return json{{"prime", prime_hex(prime)}, {"s", to_hex(msk.s)}};
}

MasterKey master_key_from_json(const json& j, const Int& expected_prime) {
  Int p = hex_to_int(j.at("prime").get<std::string>());
  if (p != expected_prime)
    throw std::invalid_argument("master key prime does not match public params");
  Scalar s = scalar_from_hex(j.at("s").get<std::string>(), p);
  if (s.is_zero()) throw std::invalid_argument("master key must be nonzero");
  return MasterKey{std::move(s)};
}

json to_json(const SecretKey& sk) {
  json shares = json::array();
  for (const auto& share : sk.shares)
    shares.push_back(json{{"attr", to_hex(share.attr)},
                          {"d1", to_hex(share.d1)},
                          {"d2", to_hex(share.d2)}});
  return json{{"identity", sk.identity.hex()},
              {"binding", binding_name(sk.binding)},
              {"shares", std::move(shares)}};
}

SecretKey secret_key_from_json(const json& j, const PublicParams& pp) {
  SecretKey sk;
  sk.identity = identity_from_hex(j.at("identity").get<std::string>());
  sk.binding = binding_from_name(j.at("binding").get<std::string>());
  const Int& p = pp.group->order();
  for (const auto& e : j.at("shares")) {
    sk.shares.push_back(
        KeyShare{scalar_from_hex(e.at("attr").get<std::string>(), p),
                 g_elem_from_hex(e.at("d1").get<std::string>(), pp.group),
                 g_elem_from_hex(e.at("d2").get<std::string>(), pp.group)});
  }
  if (sk.shares.empty()) throw std::invalid_argument("secret key has no shares");
  for (std::size_t i = 1; i < sk.shares.size(); ++i)
    if (!(sk.shares[i - 1].attr < sk.shares[i].attr))
      throw std::invalid_argument("secret key shares must be sorted by attribute");
  return sk;
}

json to_json(const SketchPar& par) {
  return json{{"blob", bytes_to_hex(sketch_to_blob(par))}};
}

SketchPar sketch_par_from_json(const json& j) {
  return sketch_from_blob(hex_to_bytes(j.at("blob").get<std::string>()));
}

json to_json(const Ciphertext& ct) {
  json attrs = json::array();
  for (const auto& v : ct.w_prime.values()) attrs.push_back(to_hex(v));
  return json{{"w_prime", std::move(attrs)},
              {"c1", to_hex(ct.c1)},
              {"c2", to_hex(ct.c2)},
              {"c3", to_hex(ct.c3)}};
}

Ciphertext ciphertext_from_json(const json& j, const PublicParams& pp) {
  const Int& p = pp.group->order();
  std::vector<Scalar> attrs;
  for (const auto& v : j.at("w_prime"))
    attrs.push_back(scalar_from_hex(v.get<std::string>(), p));
  return Ciphertext{AttributeSet::from_values(std::move(attrs)),
                    g_elem_from_hex(j.at("c1").get<std::string>(), pp.group),
                    g_elem_from_hex(j.at("c2").get<std::string>(), pp.group),
                    gt_elem_from_hex(j.at("c3").get<std::string>(), pp.group)};
}

json to_json(const AttackTranscript& t) {
  json target = json::array();
  for (const auto& v : t.target_w_prime.values()) target.push_back(to_hex(v));
  json queried = json::array();
  for (const auto& v : t.queried_w.values()) queried.push_back(to_hex(v));
  json subset = json::array();
  for (const auto& v : t.chosen_subset) subset.push_back(to_hex(v));
  json stripped = json::array();
  for (const auto& [attr, u] : t.stripped)
    stripped.push_back(json{{"attr", to_hex(attr)}, {"u", to_hex(u)}});
  return json{{"target_w_prime", std::move(target)},
              {"queried_w", std::move(queried)},
              {"chosen_subset", std::move(subset)},
              {"stripped_shares", std::move(stripped)},
              {"recovered", to_hex(t.recovered)}};
}

json to_json(const GameResult& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json entry{{"b", rec.b},
               {"b_guess", rec.b_guess},
               {"rejected_queries", rec.rejected_queries}};
    if (rec.recovered_equals_mb)
      entry["recovered_equals_mb"] = *rec.recovered_equals_mb;
    records.push_back(std::move(entry));
  }
  return json{{"trials", r.trials},
              {"wins", r.wins},
              {"advantage", r.advantage},
              {"records", std::move(records)}};
}

// ---- keystore envelopes ----------------------------------------------------

std::string envelope_string(const std::string& role, json payload,
                            std::optional<std::uint64_t> seed) {
  json envelope{{"role", role},
                {"version", kRecordVersion},
                {"payload", std::move(payload)}};
  if (seed) envelope["metadata"] = json{{"seed", *seed}};
  return envelope.dump(2) + "\n";
}

json open_envelope(const std::string& text, const std::string& expected_role) {
  json envelope;
  try {
    envelope = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  if (!envelope.contains("role") || !envelope.contains("version") ||
      !envelope.contains("payload"))
    throw std::invalid_argument("record is missing envelope fields");
  if (envelope.at("version").get<int>() != kRecordVersion)
    throw std::invalid_argument("unsupported record version");
  if (envelope.at("role").get<std::string>() != expected_role)
    throw std::invalid_argument("record role is '" +
                                envelope.at("role").get<std::string>() +
                                "', expected '" + expected_role + "'");
  return envelope;
}

void write_envelope_file(const std::filesystem::path& path,
                         const std::string& role, json payload,
                         std::optional<std::uint64_t> seed, bool overwrite,
                         bool restrict_permissions) {
  namespace fs = std::filesystem;
  if (!overwrite && fs::exists(path))
    throw IoError("refusing to overwrite " + path.string() +
                  " (pass --force to allow)");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << envelope_string(role, std::move(payload), seed);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
  if (restrict_permissions) {
    std::error_code ec;
    fs::permissions(path,
                    fs::perms::owner_read | fs::perms::owner_write,
                    fs::perm_options::replace, ec);
    if (ec) throw IoError("cannot restrict permissions on " + path.string());
  }
}

json read_envelope_file(const std::filesystem::path& path,
                        const std::string& expected_role) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path.string());
  return open_envelope(text, expected_role);
}

}  // namespace bioibe

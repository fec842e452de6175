#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "theta/errors.hpp"
#include "theta/partition.hpp"

namespace theta {

namespace {

constexpr const char* kMagic = "THETA-ASYM-PTABLE v1";

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

}  // namespace

void save_table(const PartitionTable& t, const std::string& path) {
  std::ostringstream body;
  body << kMagic << '\n';
  body << "k=" << t.k << " N=" << t.max_n() << '\n';
  for (unsigned long n = 0; n <= t.max_n(); ++n)
    body << n << '\t' << t.values[n].get_str() << '\n';
  const std::string payload = body.str();

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open cache file for writing: " + path);
  f << payload << "sha256=" << sha256_hex(payload) << '\n';
  if (!f) throw std::runtime_error("write failed: " + path);
}

PartitionTable load_table(const std::string& path, unsigned expect_k) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CorruptCache("cannot open cache file: " + path);
  std::string raw((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

  const std::string tag = "sha256=";
  // Payload ends right before the final sha256 line.
  const auto tail = raw.rfind(tag);
  if (tail == std::string::npos || tail == 0 || raw[tail - 1] != '\n')
    throw CorruptCache("missing checksum line: " + path);
  const std::string payload = raw.substr(0, tail);
  std::string stored = raw.substr(tail + tag.size());
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != sha256_hex(payload)) throw CorruptCache("checksum mismatch: " + path);

  std::istringstream in(payload);
  std::string line;
  if (!std::getline(in, line) || line != kMagic)
    throw CorruptCache("bad magic line: " + path);

  unsigned long k = 0, N = 0;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "k=%lu N=%lu", &k, &N) != 2 || k == 0)
    throw CorruptCache("bad header line: " + path);
  if (expect_k != 0 && k != expect_k)
    throw CorruptCache("cache holds k=" + std::to_string(k) + ", requested k=" +
                       std::to_string(expect_k));

  PartitionTable t;
  t.k = static_cast<unsigned>(k);
  t.values.resize(N + 1);
  for (unsigned long n = 0; n <= N; ++n) {
    if (!std::getline(in, line)) throw CorruptCache("truncated value block: " + path);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw CorruptCache("bad value line: " + path);
    unsigned long idx = 0;
    try {
      idx = std::stoul(line.substr(0, tab));
    } catch (const std::exception&) {
      throw CorruptCache("bad value index: " + path);
    }
    if (idx != n) throw CorruptCache("value index out of order: " + path);
    if (mpz_set_str(t.values[n].get_mpz_t(), line.c_str() + tab + 1, 10) != 0)
      throw CorruptCache("bad decimal value: " + path);
  }
  if (std::getline(in, line) && !line.empty())
    throw CorruptCache("trailing data after value block: " + path);
  return t;
}

}  // namespace theta

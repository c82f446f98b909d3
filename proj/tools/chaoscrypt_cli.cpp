// Command-line front end: encrypt/decrypt under a key file, serve the
// encryption oracle over TCP, run the chosen-plaintext break against a
// served or in-process oracle, and walk the built-in 4x4 known-answer
// example.

#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaoscrypt/attack.hpp"
#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/kat.hpp"
#include "chaoscrypt/key.hpp"
#include "chaoscrypt/oracle.hpp"
#include "chaoscrypt/pgm.hpp"
#include "chaoscrypt/server.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitProtocol = 4;
constexpr int kExitVerification = 5;

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw chaoscrypt::Error("cannot create file: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw chaoscrypt::Error("short write to file: " + path.string());
  }
}

void dump_permutation(const std::filesystem::path& path,
                      const chaoscrypt::PermutationMap& perm) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw chaoscrypt::Error("cannot create file: " + path.string());
  }
  for (const std::uint32_t s : perm.source()) {
    out << s << '\n';
  }
  if (!out) {
    throw chaoscrypt::Error("short write to file: " + path.string());
  }
}

void print_matrix(std::ostream& os, const std::string& title,
                  std::span<const std::uint8_t> cells, std::uint32_t side) {
  os << title << '\n';
  for (std::uint32_t r = 0; r < side; ++r) {
    for (std::uint32_t c = 0; c < side; ++c) {
      os << (c == 0 ? "  " : " ");
      const int v = cells[std::size_t{r} * side + c];
      os << (v < 10 ? "  " : v < 100 ? " " : "") << v;
    }
    os << '\n';
  }
}

int run_encrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path, bool decrypt_mode) {
  const chaoscrypt::SecretKey key = chaoscrypt::load_key_file(key_path);
  const chaoscrypt::PixelGrid input = chaoscrypt::read_pgm(in_path);
  const chaoscrypt::PixelGrid output =
      decrypt_mode ? chaoscrypt::decrypt(input, key) : chaoscrypt::encrypt(input, key);
  chaoscrypt::write_pgm(output, out_path);
  return kExitOk;
}

int run_keystream(const std::string& key_path, std::size_t length,
                  const std::string& out_path) {
  const chaoscrypt::SecretKey key = chaoscrypt::load_key_file(key_path);
  const chaoscrypt::Keystream ks = chaoscrypt::derive_keystream(key, length);
  write_bytes(out_path, ks);
  return kExitOk;
}

chaoscrypt::OracleServer* g_server = nullptr;

void handle_shutdown(int) {
  if (g_server != nullptr) {
    g_server->stop();
  }
}

int run_serve(const std::string& key_path, const std::string& listen) {
  const chaoscrypt::SecretKey key = chaoscrypt::load_key_file(key_path);
  chaoscrypt::OracleServer server(key, listen, &std::cerr);
  g_server = &server;
  std::signal(SIGINT, handle_shutdown);
  std::signal(SIGTERM, handle_shutdown);

  const auto ep = chaoscrypt::net::parse_endpoint(listen);
  std::cout << "oracle listening on " << (ep.host.empty() ? "0.0.0.0" : ep.host) << ":"
            << server.port() << std::endl;

  server.run();
  std::cerr << "oracle stopped after " << server.query_count() << " queries\n";
  g_server = nullptr;
  return kExitOk;
}

int run_attack(const std::string& cipher_path, const std::string& oracle_endpoint,
               const std::string& key_path, const std::string& out_path,
               const std::string& dump_ks_path, const std::string& dump_perm_path) {
  const chaoscrypt::PixelGrid intercepted = chaoscrypt::read_pgm(cipher_path);

  std::unique_ptr<chaoscrypt::Oracle> oracle;
  if (!oracle_endpoint.empty()) {
    oracle = std::make_unique<chaoscrypt::RemoteOracle>(oracle_endpoint);
  } else {
    oracle = std::make_unique<chaoscrypt::KeyOracle>(chaoscrypt::load_key_file(key_path));
  }

  const chaoscrypt::AttackTranscript transcript =
      chaoscrypt::full_attack(*oracle, intercepted);

  const std::uint32_t side = intercepted.side();
  const std::size_t pixels = intercepted.pixel_count();
  const std::size_t probes = chaoscrypt::probe_count(side);

  std::cout << "intercepted image: " << side << "x" << side << " (" << pixels
            << " pixels)\n";
  std::cout << "recovered keystream: " << transcript.recovered_keystream.size()
            << " bytes\n";
  std::cout << "recovered shuffle table: " << transcript.recovered_permutation.size()
            << " entries\n";
  std::cout << "oracle queries: " << transcript.oracle_queries << " (1 zero probe + "
            << probes << " index probe" << (probes == 1 ? "" : "s") << ")\n";
  if (probes > 1) {
    std::cout << "note: " << pixels << " pixel indices do not fit the 256 values an\n"
              << "      8-bit probe pixel can carry; each index probe contributes one\n"
              << "      base-256 digit, so " << probes
              << " index probes are needed instead of 1\n"
              << "      (two total queries suffice only up to 16x16).\n";
  }

  chaoscrypt::write_pgm(transcript.recovered_plaintext, out_path);
  std::cout << "recovered plaintext written to " << out_path << '\n';
  if (!dump_ks_path.empty()) {
    write_bytes(dump_ks_path, transcript.recovered_keystream);
  }
  if (!dump_perm_path.empty()) {
    dump_permutation(dump_perm_path, transcript.recovered_permutation);
  }
  return kExitOk;
}

// Walks the 4x4 known-answer example end to end: zero probe leaks the
// keystream, index probe leaks the shuffle, intercepted cipher falls.
// Exits nonzero if any stage disagrees with the frozen vectors.
int run_demo() {
  namespace kat = chaoscrypt::kat;
  using chaoscrypt::PixelGrid;

  bool ok = true;
  const auto check = [&ok](bool condition, const std::string& what) {
    std::cout << "  " << what << (condition ? ": ok" : ": MISMATCH") << '\n';
    ok = ok && condition;
  };
  const auto grid = [](std::span<const std::uint8_t> cells) {
    return PixelGrid(kat::kSide, {cells.begin(), cells.end()});
  };

  const PixelGrid plain = grid(kat::kPlain);
  const chaoscrypt::Keystream keystream{kat::kKeystream.begin(), kat::kKeystream.end()};
  const PixelGrid cipher = grid(kat::kCipher);
  const chaoscrypt::PermutationMap perm(
      kat::kSide, {kat::kPermutationSource.begin(), kat::kPermutationSource.end()});

  std::cout << "4x4 known-answer walkthrough\n\n";
  print_matrix(std::cout, "plain image P:", kat::kPlain, kat::kSide);
  print_matrix(std::cout, "keystream K (hidden inside the oracle):", kat::kKeystream,
               kat::kSide);
  print_matrix(std::cout, "intercepted cipher image C:", kat::kCipher, kat::kSide);
  check(chaoscrypt::encrypt_with_parts(plain, perm, keystream) == cipher,
        "cipher machinery reproduces C from P");

  chaoscrypt::PartsOracle oracle(perm, keystream);

  std::cout << "\nstep 1-2: query the all-zero image P1; its shuffle is still all\n"
               "zeros, so the response C1 is the keystream itself\n";
  const PixelGrid c1 = oracle.encrypt_image(PixelGrid::zero(kat::kSide));
  print_matrix(std::cout, "response C1:", c1.bytes(), kat::kSide);
  check(std::equal(c1.bytes().begin(), c1.bytes().end(), kat::kKeystream.begin()),
        "C1 equals K");

  std::cout << "\nstep 3: S = C xor K recovers the shuffled plain image\n";
  const PixelGrid shuffled = chaoscrypt::xor_bytes(cipher, keystream);
  print_matrix(std::cout, "shuffled image S:", shuffled.bytes(), kat::kSide);
  check(std::equal(shuffled.bytes().begin(), shuffled.bytes().end(),
                   kat::kShuffled.begin()),
        "S matches the expected shuffle of P");

  std::cout << "\nstep 4-5: query the index probe P2 (pixel values 1..16)\n";
  print_matrix(std::cout, "probe P2:", kat::kProbe, kat::kSide);
  const PixelGrid c2 = oracle.encrypt_image(grid(kat::kProbe));
  print_matrix(std::cout, "response C2:", c2.bytes(), kat::kSide);
  check(std::equal(c2.bytes().begin(), c2.bytes().end(), kat::kProbeCipher.begin()),
        "C2 matches the expected probe cipher");

  std::cout << "\nstep 6: S2 = C2 xor K exposes where every probe pixel landed\n";
  const PixelGrid s2 = chaoscrypt::xor_bytes(c2, keystream);
  print_matrix(std::cout, "shuffled probe S2:", s2.bytes(), kat::kSide);
  check(std::equal(s2.bytes().begin(), s2.bytes().end(), kat::kProbeShuffled.begin()),
        "S2 spells out the shuffle table");

  std::cout << "\nstep 7: move every cell of S back to its source position\n";
  const chaoscrypt::AttackTranscript transcript = chaoscrypt::full_attack(oracle, cipher);
  print_matrix(std::cout, "recovered image M:", transcript.recovered_plaintext.bytes(),
               kat::kSide);
  check(transcript.recovered_plaintext == plain, "M equals the original P");
  check(transcript.oracle_queries == 2, "the break spent exactly 2 oracle queries");

  std::cout << (ok ? "\nall stages verified\n" : "\nverification FAILED\n");
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaotic image cipher (cat-map shuffle + Chen keystream XOR) and the\n"
               "chosen-plaintext break that recovers images without the key"};
  app.require_subcommand(1);

  std::string key_path;
  std::string in_path;
  std::string out_path;
  std::string listen = "127.0.0.1:0";
  std::string cipher_path;
  std::string oracle_endpoint;
  std::string dump_ks_path;
  std::string dump_perm_path;
  std::size_t ks_length = 0;

  auto* enc = app.add_subcommand("encrypt", "encrypt a PGM image under a key file");
  enc->add_option("--key", key_path, "key file")->required();
  enc->add_option("--in", in_path, "input PGM (P5, square)")->required();
  enc->add_option("--out", out_path, "output PGM")->required();

  auto* dec = app.add_subcommand("decrypt", "decrypt a PGM image under a key file");
  dec->add_option("--key", key_path, "key file")->required();
  dec->add_option("--in", in_path, "input PGM (P5, square)")->required();
  dec->add_option("--out", out_path, "output PGM")->required();

  auto* ks = app.add_subcommand("keystream", "derive raw keystream bytes from a key file");
  ks->add_option("--key", key_path, "key file")->required();
  ks->add_option("--len", ks_length, "number of bytes")->required()
      ->check(CLI::PositiveNumber);
  ks->add_option("--out", out_path, "output file (raw bytes, no header)")->required();

  auto* serve = app.add_subcommand("oracle-serve",
                                   "serve encryption queries over TCP (key stays hidden)");
  serve->add_option("--key", key_path, "key file")->required();
  serve->add_option("--listen", listen, "host:port to bind (port 0 picks a free port)")
      ->required();

  auto* attack = app.add_subcommand(
      "attack", "recover keystream, shuffle and plaintext from an oracle, no key needed");
  attack->add_option("--cipher", cipher_path, "intercepted cipher image (PGM)")->required();
  auto* opt_oracle =
      attack->add_option("--oracle", oracle_endpoint, "host:port of a served oracle");
  auto* opt_key = attack->add_option(
      "--key", key_path, "key file for an in-process oracle (self-contained demo)");
  opt_oracle->excludes(opt_key);
  attack->add_option("--out", out_path, "recovered plaintext PGM")->required();
  attack->add_option("--dump-keystream", dump_ks_path, "also dump the keystream (raw bytes)");
  attack->add_option("--dump-perm", dump_perm_path,
                     "also dump the shuffle table (one source index per line)");

  app.add_subcommand("demo-algorithm1",
                     "print and verify the built-in 4x4 known-answer example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enc->parsed()) {
      return run_encrypt(key_path, in_path, out_path, /*decrypt_mode=*/false);
    }
    if (dec->parsed()) {
      return run_encrypt(key_path, in_path, out_path, /*decrypt_mode=*/true);
    }
    if (ks->parsed()) {
      return run_keystream(key_path, ks_length, out_path);
    }
    if (serve->parsed()) {
      return run_serve(key_path, listen);
    }
    if (attack->parsed()) {
      if (oracle_endpoint.empty() && key_path.empty()) {
        std::cerr << "attack needs either --oracle or --key\n";
        return kExitUsage;
      }
      return run_attack(cipher_path, oracle_endpoint, key_path, out_path, dump_ks_path,
                        dump_perm_path);
    }
    return run_demo();
  } catch (const chaoscrypt::OracleInconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const chaoscrypt::ProtocolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const chaoscrypt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

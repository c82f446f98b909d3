// Python bindings for the cipher, the oracle interfaces and the attack.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "chaoscrypt/attack.hpp"
#include "chaoscrypt/chen.hpp"
#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/kat.hpp"
#include "chaoscrypt/key.hpp"
#include "chaoscrypt/oracle.hpp"
#include "chaoscrypt/pgm.hpp"
#include "chaoscrypt/server.hpp"

namespace py = pybind11;
using namespace chaoscrypt;

namespace {

std::vector<std::uint8_t> to_bytes(const py::bytes& data) {
  const std::string_view view = data;
  return {view.begin(), view.end()};
}

py::bytes from_bytes(std::span<const std::uint8_t> data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

PixelGrid make_grid(std::uint32_t side, const py::bytes& data) {
  return PixelGrid(side, to_bytes(data));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chaotic image cipher (cat-map shuffle + Chen keystream XOR) and the "
            "chosen-plaintext attack that breaks it";

  // translators run newest-first, so the base class goes in first
  py::register_exception<Error>(m, "ChaosCryptError", PyExc_RuntimeError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_ConnectionError);
  py::register_exception<OracleInconsistency>(m, "OracleInconsistencyError",
                                              PyExc_RuntimeError);

  py::class_<SecretKey>(m, "SecretKey")
      .def(py::init([](std::uint32_t p, std::uint32_t q, std::uint64_t n, double x0,
                       double y0, double z0, double c) {
             SecretKey key{p, q, n, x0, y0, z0, c};
             validate_key(key);
             return key;
           }),
           py::arg("p"), py::arg("q"), py::arg("n"), py::arg("x0"), py::arg("y0"),
           py::arg("z0"), py::arg("c"))
      .def_readonly("p", &SecretKey::p)
      .def_readonly("q", &SecretKey::q)
      .def_readonly("n", &SecretKey::n)
      .def_readonly("x0", &SecretKey::x0)
      .def_readonly("y0", &SecretKey::y0)
      .def_readonly("z0", &SecretKey::z0)
      .def_readonly("c", &SecretKey::c)
      .def("__eq__", [](const SecretKey& a, const SecretKey& b) { return a == b; })
      .def("__repr__", [](const SecretKey& k) {
        return "SecretKey(p=" + std::to_string(k.p) + ", q=" + std::to_string(k.q) +
               ", n=" + std::to_string(k.n) + ", ...)";
      });

  m.def("parse_key_text", &parse_key_text, py::arg("text"));
  m.def("load_key_file",
        [](const std::string& path) { return load_key_file(path); }, py::arg("path"));
  m.def("format_key_text", &format_key_text, py::arg("key"));

  py::class_<PixelGrid>(m, "PixelGrid")
      .def(py::init(&make_grid), py::arg("side"), py::arg("data"))
      .def_static("zero", &PixelGrid::zero, py::arg("side"))
      .def_property_readonly("side", &PixelGrid::side)
      .def("tobytes", [](const PixelGrid& g) { return from_bytes(g.bytes()); })
      .def("__len__", &PixelGrid::pixel_count)
      .def("__getitem__",
           [](const PixelGrid& g, std::size_t i) {
             if (i >= g.pixel_count()) {
               throw py::index_error();
             }
             return g[i];
           })
      .def("__eq__", [](const PixelGrid& a, const PixelGrid& b) { return a == b; })
      .def("__repr__", [](const PixelGrid& g) {
        return "PixelGrid(side=" + std::to_string(g.side()) + ")";
      });

  m.def("read_pgm", [](const std::string& path) { return read_pgm(path); },
        py::arg("path"));
  m.def("write_pgm",
        [](const PixelGrid& img, const std::string& path) { write_pgm(img, path); },
        py::arg("image"), py::arg("path"));

  py::class_<PermutationMap>(m, "PermutationMap")
      .def(py::init<std::uint32_t, std::vector<std::uint32_t>>(), py::arg("side"),
           py::arg("source"))
      .def_static("identity", &PermutationMap::identity, py::arg("side"))
      .def_property_readonly("side", &PermutationMap::side)
      .def_property_readonly("source",
                             [](const PermutationMap& p) {
                               return std::vector<std::uint32_t>(p.source().begin(),
                                                                 p.source().end());
                             })
      .def("__len__", &PermutationMap::size)
      .def("__eq__",
           [](const PermutationMap& a, const PermutationMap& b) { return a == b; });

  m.def("derive_keystream",
        [](const SecretKey& key, std::size_t length) {
          return from_bytes(derive_keystream(key, length));
        },
        py::arg("key"), py::arg("length"));
  m.def("permutation_for_key", &permutation_for_key, py::arg("key"), py::arg("side"));
  m.def("shuffle", &shuffle, py::arg("image"), py::arg("permutation"));
  m.def("unshuffle", &unshuffle, py::arg("image"), py::arg("permutation"));
  m.def("encrypt", &encrypt, py::arg("image"), py::arg("key"));
  m.def("decrypt", &decrypt, py::arg("image"), py::arg("key"));
  m.def("encrypt_with_parts",
        [](const PixelGrid& img, const PermutationMap& perm, const py::bytes& ks) {
          return encrypt_with_parts(img, perm, to_bytes(ks));
        },
        py::arg("image"), py::arg("permutation"), py::arg("keystream"));

  py::class_<Oracle>(m, "Oracle")
      .def("encrypt_image", &Oracle::encrypt_image, py::arg("image"))
      .def_property_readonly("query_count", &Oracle::query_count);
  py::class_<KeyOracle, Oracle>(m, "KeyOracle").def(py::init<const SecretKey&>(),
                                                    py::arg("key"));
  py::class_<PartsOracle, Oracle>(m, "PartsOracle")
      .def(py::init([](const PermutationMap& perm, const py::bytes& ks) {
             return PartsOracle(perm, to_bytes(ks));
           }),
           py::arg("permutation"), py::arg("keystream"));
  py::class_<RemoteOracle, Oracle>(m, "RemoteOracle").def(py::init<const std::string&>(),
                                                          py::arg("endpoint"));

  m.def("probe_count", &probe_count, py::arg("side"));
  m.def("build_probes",
        [](std::uint32_t side) { return build_probes(side).probes; }, py::arg("side"));
  m.def("recover_keystream",
        [](Oracle& oracle, std::uint32_t side) {
          return from_bytes(recover_keystream(oracle, side));
        },
        py::arg("oracle"), py::arg("side"));
  m.def("recover_permutation",
        [](Oracle& oracle, const py::bytes& ks, std::uint32_t side) {
          return recover_permutation(oracle, to_bytes(ks), side);
        },
        py::arg("oracle"), py::arg("keystream"), py::arg("side"));
  m.def("recover_plaintext",
        [](const PixelGrid& cipher, const py::bytes& ks, const PermutationMap& perm) {
          return recover_plaintext(cipher, to_bytes(ks), perm);
        },
        py::arg("cipher"), py::arg("keystream"), py::arg("permutation"));

  py::class_<AttackTranscript>(m, "AttackTranscript")
      .def_property_readonly("recovered_keystream",
                             [](const AttackTranscript& t) {
                               return from_bytes(t.recovered_keystream);
                             })
      .def_readonly("recovered_permutation", &AttackTranscript::recovered_permutation)
      .def_readonly("oracle_queries", &AttackTranscript::oracle_queries)
      .def_readonly("recovered_plaintext", &AttackTranscript::recovered_plaintext);
  m.def("full_attack", &full_attack, py::arg("oracle"), py::arg("intercepted"));

  // the 4x4 known-answer tables, handy for demos and tests
  py::dict kat_dict;
  kat_dict["side"] = kat::kSide;
  kat_dict["plain"] = from_bytes(kat::kPlain);
  kat_dict["keystream"] = from_bytes(kat::kKeystream);
  kat_dict["cipher"] = from_bytes(kat::kCipher);
  kat_dict["shuffled"] = from_bytes(kat::kShuffled);
  kat_dict["probe_cipher"] = from_bytes(kat::kProbeCipher);
  kat_dict["permutation_source"] = std::vector<std::uint32_t>(
      kat::kPermutationSource.begin(), kat::kPermutationSource.end());
  m.attr("KNOWN_ANSWER") = kat_dict;
}

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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "pkeet/io.hpp"

namespace py = pybind11;

namespace {

using namespace pkeet;
namespace g = pkeet::group;

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  return seed ? Rng::from_seed(*seed) : Rng::from_entropy();
}

Bytes bytes_in(const py::bytes& data) {
  std::string s = data;
  return Bytes(s.begin(), s.end());
}

py::bytes bytes_out(const Bytes& b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

mpz_class mpz_in(const py::int_& v) {
  mpz_class out;
  if (out.set_str(static_cast<std::string>(py::str(v)), 10) != 0) {
    throw py::value_error("expected an integer");
  }
  return out;
}

py::object int_out(const mpz_class& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_pkeet, m) {
  m.doc() = "Public-key encryption with equality test over safe-prime groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PublicParams>(m, "PublicParams")
      .def_property_readonly(
          "bits", [](const PublicParams& pp) { return pp.group.security_bits; })
      .def_property_readonly(
          "modulus",
          [](const PublicParams& pp) { return int_out(pp.group.modulus); })
      .def_property_readonly(
          "order", [](const PublicParams& pp) { return int_out(pp.group.order); })
      .def_property_readonly(
          "generator",
          [](const PublicParams& pp) { return int_out(pp.group.generator); })
      .def("to_bytes",
           [](const PublicParams& pp) { return bytes_out(io::params_to_bytes(pp)); })
      .def_static("from_bytes",
                  [](const py::bytes& data) {
                    return io::params_from_bytes(bytes_in(data));
                  },
                  py::arg("data"))
      .def(py::self == py::self)
      .def("__repr__", [](const PublicParams& pp) {
        return "<pkeet.PublicParams bits=" +
               std::to_string(pp.group.security_bits) + ">";
      });

  py::class_<EncKey>(m, "EncKey")
      .def("to_bytes",
           [](const EncKey& ek, const PublicParams& pp) {
             return bytes_out(io::enc_key_to_bytes(pp, ek));
           },
           py::arg("pp"))
      .def_static("from_bytes",
                  [](const PublicParams& pp, const py::bytes& data) {
                    return io::enc_key_from_bytes(pp, bytes_in(data));
                  },
                  py::arg("pp"), py::arg("data"))
      .def(py::self == py::self);

  py::class_<DecKey>(m, "DecKey")
      .def("to_bytes",
           [](const DecKey& dk, const PublicParams& pp) {
             return bytes_out(io::dec_key_to_bytes(pp, dk));
           },
           py::arg("pp"))
      .def_static("from_bytes",
                  [](const PublicParams& pp, const py::bytes& data) {
                    return io::dec_key_from_bytes(pp, bytes_in(data));
                  },
                  py::arg("pp"), py::arg("data"))
      .def(py::self == py::self);

  py::class_<Trapdoor>(m, "Trapdoor")
      .def("to_bytes",
           [](const Trapdoor& td, const PublicParams& pp) {
             return bytes_out(io::trapdoor_to_bytes(pp, td));
           },
           py::arg("pp"))
      .def_static("from_bytes",
                  [](const PublicParams& pp, const py::bytes& data) {
                    return io::trapdoor_from_bytes(pp, bytes_in(data));
                  },
                  py::arg("pp"), py::arg("data"))
      .def(py::self == py::self);

  py::class_<Ciphertext>(m, "Ciphertext")
      .def("to_bytes",
           [](const Ciphertext& ct, const PublicParams& pp) {
             return bytes_out(ciphertext_to_bytes(pp, ct));
           },
           py::arg("pp"))
      .def_static("from_bytes",
                  [](const PublicParams& pp, const py::bytes& data) {
                    return ciphertext_from_bytes(pp, bytes_in(data));
                  },
                  py::arg("pp"), py::arg("data"))
      .def(py::self == py::self);

  m.def(
      "setup",
      [](unsigned bits, const std::optional<std::uint64_t>& seed) {
        Rng rng = make_rng(seed);
        return setup(bits, rng);
      },
      py::arg("bits") = 128, py::arg("seed") = py::none(),
      "Generate public parameters with a subgroup order of `bits` bits.");

  m.def("tiny_test_params", &tiny_test_params,
        "Fixed insecure parameters (P = 23) for tests and examples.");

  m.def(
      "keygen",
      [](const PublicParams& pp, const std::optional<std::uint64_t>& seed) {
        Rng rng = make_rng(seed);
        return kgen(pp, rng);
      },
      py::arg("pp"), py::arg("seed") = py::none(),
      "Generate an (EncKey, DecKey) pair.");

  m.def("trapdoor", &tdgen, py::arg("dk"),
        "Derive the equality-test trapdoor from a decryption key.");

  m.def(
      "encrypt",
      [](const PublicParams& pp, const EncKey& ek, const py::int_& msg,
         const std::optional<std::uint64_t>& seed) {
        Rng rng = make_rng(seed);
        GroupElement pt = g::encode_message(pp.group, mpz_in(msg));
        return enc(pp, ek, pt, rng);
      },
      py::arg("pp"), py::arg("ek"), py::arg("msg"),
      py::arg("seed") = py::none(),
      "Encrypt an integer message in [1, order].");

  m.def(
      "decrypt",
      [](const PublicParams& pp, const DecKey& dk, const Ciphertext& ct,
         const std::optional<std::uint64_t>& seed) -> py::object {
        Rng rng = make_rng(seed);
        std::optional<GroupElement> pt = dec(pp, dk, ct, rng);
        if (!pt) return py::none();
        return int_out(g::decode_message(pp.group, *pt));
      },
      py::arg("pp"), py::arg("dk"), py::arg("ct"),
      py::arg("seed") = py::none(),
      "Decrypt; returns the integer message, or None if the ciphertext is "
      "rejected.");

  m.def(
      "test_equality",
      [](const PublicParams& pp, const Ciphertext& ct_a, const Trapdoor& td_a,
         const Ciphertext& ct_b, const Trapdoor& td_b, bool strict,
         const std::optional<std::uint64_t>& seed) {
        Rng rng = make_rng(seed);
        return pkeet::test_equality(pp, {ct_a, td_a}, {ct_b, td_b}, strict,
                                    rng);
      },
      py::arg("pp"), py::arg("ct_a"), py::arg("td_a"), py::arg("ct_b"),
      py::arg("td_b"), py::arg("strict") = false, py::arg("seed") = py::none(),
      "Compare the plaintexts behind two ciphertexts using their trapdoors.");
}

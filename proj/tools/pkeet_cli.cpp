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

// pkeet: encryption with cross-user equality testing.
//
// Exit codes: 0 success (test prints its verdict, EQUAL or NOT-EQUAL, and
// exits 0 either way), 1 semantic reject (decrypt printed REJECT), 2 file
// I/O failure, 3 bad flags or arguments, 4 malformed input file.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "pkeet/io.hpp"

namespace {

using namespace pkeet;

Rng make_rng(const std::optional<std::uint64_t>& seed) {
  return seed ? Rng::from_seed(*seed) : Rng::from_entropy();
}

PublicParams load_params(const std::string& path) {
  return io::params_from_bytes(io::read_file(path));
}

struct Options {
  std::string pp_path, ek_path, dk_path, td_path;
  std::string ct_a_path, td_a_path, ct_b_path, td_b_path;
  std::string out, out_ek, out_dk, out_td;
  std::string msg;
  std::string profile = "secure";
  unsigned bits = 128;
  bool strict = false;
  std::optional<std::uint64_t> seed;
};

int cmd_setup(const Options& opt) {
  Rng rng = make_rng(opt.seed);
  PublicParams pp;
  if (opt.profile == "tiny-test") {
    pp = tiny_test_params();
    std::cerr << "warning: tiny-test parameters provide no security\n";
  } else {
    pp = setup(opt.bits, rng);
  }
  io::write_file(opt.out, io::params_to_bytes(pp));
  return 0;
}

int cmd_keygen(const Options& opt) {
  PublicParams pp = load_params(opt.pp_path);
  Rng rng = make_rng(opt.seed);
  auto [ek, dk] = kgen(pp, rng);
  io::write_file(opt.out_ek, io::enc_key_to_bytes(pp, ek));
  io::write_file(opt.out_dk, io::dec_key_to_bytes(pp, dk));
  return 0;
}

int cmd_trapdoor(const Options& opt) {
  Bytes dk_bytes = io::read_file(opt.dk_path);
  io::write_file(opt.out_td, io::trapdoor_bytes_from_dec_key_bytes(dk_bytes));
  return 0;
}

int cmd_encrypt(const Options& opt) {
  PublicParams pp = load_params(opt.pp_path);
  EncKey ek = io::enc_key_from_bytes(pp, io::read_file(opt.ek_path));
  mpz_class m;
  if (m.set_str(opt.msg, 10) != 0) {
    std::cerr << "error: --msg must be a decimal integer\n";
    return 3;
  }
  if (m < 1 || m > pp.group.order) {
    std::cerr << "error: --msg must be in [1, q]\n";
    return 3;
  }
  Rng rng = make_rng(opt.seed);
  Ciphertext ct = enc(pp, ek, group::encode_message(pp.group, m), rng);
  io::write_file(opt.out, ciphertext_to_bytes(pp, ct));
  return 0;
}

int cmd_decrypt(const Options& opt) {
  PublicParams pp = load_params(opt.pp_path);
  DecKey dk = io::dec_key_from_bytes(pp, io::read_file(opt.dk_path));
  Ciphertext ct = ciphertext_from_bytes(pp, io::read_file(opt.ct_a_path));
  Rng rng = make_rng(opt.seed);
  std::optional<GroupElement> pt = dec(pp, dk, ct, rng);
  if (!pt) {
    std::cout << "REJECT\n";
    return 1;
  }
  std::cout << group::decode_message(pp.group, *pt).get_str() << "\n";
  return 0;
}

int cmd_test(const Options& opt) {
  PublicParams pp = load_params(opt.pp_path);
  Ciphertext ct_a = ciphertext_from_bytes(pp, io::read_file(opt.ct_a_path));
  Trapdoor td_a = io::trapdoor_from_bytes(pp, io::read_file(opt.td_a_path));
  Ciphertext ct_b = ciphertext_from_bytes(pp, io::read_file(opt.ct_b_path));
  Trapdoor td_b = io::trapdoor_from_bytes(pp, io::read_file(opt.td_b_path));
  Rng rng = make_rng(opt.seed);
  bool equal =
      test_equality(pp, {ct_a, td_a}, {ct_b, td_b}, opt.strict, rng);
  // Either verdict is a successful comparison; exit 0 for both.
  std::cout << (equal ? "EQUAL\n" : "NOT-EQUAL\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"public-key encryption with equality test"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pkeet 0.1.0");

  Options opt;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed,
                    "deterministic randomness (testing only)");
  };

  CLI::App* setup_cmd =
      app.add_subcommand("setup", "generate public parameters");
  setup_cmd->add_option("--bits", opt.bits, "group order size in bits")
      ->check(CLI::Range(8u, 4096u))
      ->capture_default_str();
  setup_cmd->add_option("--profile", opt.profile, "secure or tiny-test")
      ->check(CLI::IsMember({"secure", "tiny-test"}))
      ->capture_default_str();
  setup_cmd->add_option("--out", opt.out, "output params file")->required();
  add_seed(setup_cmd);

  CLI::App* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  keygen_cmd->add_option("pp", opt.pp_path, "params file")->required();
  keygen_cmd->add_option("--out-ek", opt.out_ek, "output encryption key")
      ->required();
  keygen_cmd->add_option("--out-dk", opt.out_dk, "output decryption key")
      ->required();
  add_seed(keygen_cmd);

  CLI::App* td_cmd =
      app.add_subcommand("trapdoor", "derive the equality-test trapdoor");
  td_cmd->add_option("dk", opt.dk_path, "decryption key file")->required();
  td_cmd->add_option("--out-td", opt.out_td, "output trapdoor file")
      ->required();

  CLI::App* enc_cmd = app.add_subcommand("encrypt", "encrypt an integer");
  enc_cmd->add_option("pp", opt.pp_path, "params file")->required();
  enc_cmd->add_option("ek", opt.ek_path, "encryption key file")->required();
  enc_cmd->add_option("--msg", opt.msg, "message, an integer in [1, q]")
      ->required();
  enc_cmd->add_option("--out", opt.out, "output ciphertext file")->required();
  add_seed(enc_cmd);

  CLI::App* dec_cmd =
      app.add_subcommand("decrypt", "decrypt; prints the message or REJECT");
  dec_cmd->add_option("pp", opt.pp_path, "params file")->required();
  dec_cmd->add_option("dk", opt.dk_path, "decryption key file")->required();
  dec_cmd->add_option("ct", opt.ct_a_path, "ciphertext file")->required();
  add_seed(dec_cmd);

  CLI::App* test_cmd = app.add_subcommand(
      "test", "compare two ciphertexts; prints EQUAL or NOT-EQUAL");
  test_cmd->add_option("pp", opt.pp_path, "params file")->required();
  test_cmd->add_option("ct_a", opt.ct_a_path, "first ciphertext")->required();
  test_cmd->add_option("td_a", opt.td_a_path, "first trapdoor")->required();
  test_cmd->add_option("ct_b", opt.ct_b_path, "second ciphertext")->required();
  test_cmd->add_option("td_b", opt.td_b_path, "second trapdoor")->required();
  test_cmd->add_flag("--strict", opt.strict,
                     "require valid signatures on both ciphertexts");
  add_seed(test_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (setup_cmd->parsed()) return cmd_setup(opt);
    if (keygen_cmd->parsed()) return cmd_keygen(opt);
    if (td_cmd->parsed()) return cmd_trapdoor(opt);
    if (enc_cmd->parsed()) return cmd_encrypt(opt);
    if (dec_cmd->parsed()) return cmd_decrypt(opt);
    if (test_cmd->parsed()) return cmd_test(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

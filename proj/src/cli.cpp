#include "eqsteg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "eqsteg/analysis.hpp"
#include "eqsteg/codec.hpp"
#include "eqsteg/error.hpp"
#include "eqsteg/keymap.hpp"

namespace eqsteg::cli {

namespace {

constexpr int kDefaultKeyMapId = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  return read_all(f);
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!(f << data)) throw IoError("cannot write " + path);
}

std::string strip_line_end(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

// "default" uses the paper tables under fallback_id; "default:N" under N;
// anything else is a keymap file path.
KeyMapRegistry load_registry(const std::vector<std::string>& specs, int fallback_id) {
  KeyMapRegistry registry;
  for (const auto& spec : specs) {
    if (spec == "default") {
      registry.add(default_keymap_set(fallback_id));
    } else if (spec.rfind("default:", 0) == 0) {
      int id = 0;
      try {
        id = std::stoi(spec.substr(8));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--keymap", "bad default id in '" + spec + "'");
      }
      registry.add(default_keymap_set(id));
    } else {
      registry.add(parse_keymap_set(read_file(spec)));
    }
  }
  return registry;
}

OperatorWeights parse_weights(const std::string& text) {
  OperatorWeights w;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= w.weights.size()) throw CLI::ValidationError("--weights", "expected 6 values");
    try {
      std::size_t used = 0;
      w.weights[i] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--weights", "bad number '" + item + "'");
    }
    ++i;
  }
  if (i != w.weights.size()) throw CLI::ValidationError("--weights", "expected 6 values");
  return w;
}

std::string render_report(const CapacityReport& r, const KeyMapSet& set) {
  std::ostringstream os;
  os << "message_length " << r.message_length << '\n';
  os << "prefix_length " << r.prefix_length << '\n';
  os << "min_total " << r.min_total << '\n';
  os << "max_total " << r.max_total << '\n';
  if (r.actual_total) os << "actual_total " << *r.actual_total << '\n';
  os << "percent_used " << r.percent_used << '\n';
  os << "max_message_optimistic " << max_message_length(set, false) << '\n';
  os << "max_message_pessimistic " << max_message_length(set, true) << '\n';
  return os.str();
}

std::string render_findings(const std::vector<LintFinding>& findings) {
  if (findings.empty()) return "no findings\n";
  std::ostringstream os;
  for (const auto& f : findings) {
    os << severity_name(f.severity) << ' ' << f.token_index << ' ' << f.rule << ": " << f.note << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide short text messages in math-quiz equations", "eqsteg"};
  app.require_subcommand(1);

  std::vector<std::string> keymaps;
  int id = kDefaultKeyMapId;
  std::uint64_t seed = 0;
  std::optional<std::string> message;
  std::optional<std::string> weights_text;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  LintConfig lint_config;

  auto* encode_cmd = app.add_subcommand("encode", "Hide a message; prints the stego text");
  encode_cmd->add_option("--keymap", keymaps, "'default', 'default:N' or a keymap file")->required();
  encode_cmd->add_option("--id", id, "Key map id to embed with")->required();
  encode_cmd->add_option("--seed", seed, "Seed for operator selection")->required();
  encode_cmd->add_option("--weights", weights_text, "Six weights for ^ + - * / %");
  encode_cmd->add_option("--message", message, "Secret message (default: stdin)");

  auto* decode_cmd = app.add_subcommand("decode", "Recover a message from stego text");
  decode_cmd->add_option("--keymap", keymaps, "'default', 'default:N' or a keymap file")->required();
  decode_cmd->add_option("--id", id, "Id used for a bare 'default' key map");
  decode_cmd->add_option("--input", input_path, "Stego text file (default: stdin)");

  std::optional<std::uint64_t> keygen_seed;
  auto* keygen_cmd = app.add_subcommand("keygen", "Write a keymap file");
  keygen_cmd->add_option("--id", id, "Key map id")->required();
  keygen_cmd->add_option("--seed", keygen_seed, "Generate random tables (default: published tables)");
  keygen_cmd->add_option("--output", output_path, "Output file (default: stdout)");

  std::optional<std::uint64_t> capacity_seed;
  auto* capacity_cmd = app.add_subcommand("capacity", "Report SMS capacity for a message");
  capacity_cmd->add_option("--keymap", keymaps, "'default', 'default:N' or a keymap file")->required();
  capacity_cmd->add_option("--id", id, "Key map id")->required();
  capacity_cmd->add_option("--seed", capacity_seed, "Also measure one concrete encoding");
  capacity_cmd->add_option("--message", message, "Secret message (default: stdin)");

  auto* lint_cmd = app.add_subcommand("lint", "Flag implausible equations in stego text or a bare equation");
  lint_cmd->add_option("--exponent-threshold", lint_config.exponent_threshold, "Largest unflagged exponent");
  lint_cmd->add_option("--dominance", lint_config.dominance_threshold, "Operator share that is flagged")
      ->check(CLI::Range(0.0, 1.0));
  lint_cmd->add_option("--input", input_path, "Input file (default: stdin)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto read_input = [&]() { return input_path ? read_file(*input_path) : read_all(in); };
  const auto read_message = [&]() { return message ? *message : strip_line_end(read_all(in)); };

  try {
    if (*encode_cmd) {
      const auto weights = weights_text ? std::optional(parse_weights(*weights_text)) : std::nullopt;
      const auto registry = load_registry(keymaps, id);
      const auto envelope = encode(read_message(), registry.at(id), seed, weights);
      out << envelope.full_text << '\n';
    } else if (*decode_cmd) {
      const auto registry = load_registry(keymaps, id);
      out << decode(strip_line_end(read_input()), registry) << '\n';
    } else if (*keygen_cmd) {
      const auto set = keygen_seed ? generate_keymap_set(id, *keygen_seed) : default_keymap_set(id);
      const auto doc = serialize_keymap_set(set);
      if (output_path) {
        write_file(*output_path, doc);
      } else {
        out << doc;
      }
    } else if (*capacity_cmd) {
      const auto registry = load_registry(keymaps, id);
      const auto& set = registry.at(id);
      out << render_report(capacity_report(read_message(), set, capacity_seed), set);
    } else if (*lint_cmd) {
      const auto text = strip_line_end(read_input());
      std::string equation = text;
      if (text.rfind("Math Quiz (", 0) == 0) equation = parse_envelope(text).equation_text;
      if (equation.empty()) {
        out << "no findings\n";
      } else {
        out << render_findings(lint_equation(tokenize_equation(equation), lint_config));
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace eqsteg::cli

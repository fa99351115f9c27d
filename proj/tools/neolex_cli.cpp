// neolex: mine candidate Quechua neologisms from pronunciation dictionaries.
//
// Exit codes: 0 success, 1 fatal I/O error, 2 bad arguments.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "neolex/neolex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

#ifndef NEOLEX_DEFAULT_LANGUAGE_MAP
#define NEOLEX_DEFAULT_LANGUAGE_MAP "data/iso639-1_to_639-3.tsv"
#endif

neolex::DiacriticPolicy policy_from(const std::string& name) {
  return name == "strip" ? neolex::DiacriticPolicy::Strip
                         : neolex::DiacriticPolicy::Reject;
}

void emit(const std::string& target, const std::string& contents) {
  if (target == "-") {
    std::cout << contents;
    std::cout.flush();
    if (!std::cout) throw neolex::IoError("cannot write", "<stdout>");
  } else {
    neolex::write_text_file(target, contents);
  }
}

struct ScanArgs {
  std::vector<std::string> files;
  std::string format;
  std::string lang = "auto";
  std::string diacritics = "reject";
  std::string gloss;
  std::string out = "-";
  std::string report;
  std::string report_format;
  std::string map = NEOLEX_DEFAULT_LANGUAGE_MAP;
  std::size_t jobs = 1;
};

int run_scan(const ScanArgs& args) {
  const auto format = args.format == "wikipron" ? neolex::DictFormat::WikiPron
                                                : neolex::DictFormat::OpenDict;
  int status = kExitOk;

  neolex::LanguageCodeMap map;
  try {
    map = neolex::LanguageCodeMap::load(args.map);
  } catch (const neolex::IoError& e) {
    std::cerr << "neolex: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "neolex: " << args.map << ": " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<neolex::GlossIndex> glosses;
  if (!args.gloss.empty()) {
    try {
      glosses = neolex::GlossIndex::load(args.gloss);
    } catch (const neolex::IoError& e) {
      std::cerr << "neolex: " << e.what() << '\n';
      return kExitIo;
    }
    if (glosses->skipped())
      std::cerr << "neolex: " << args.gloss << ": skipped "
                << glosses->skipped() << " malformed gloss lines\n";
  }

  std::vector<neolex::DictEntry> entries;
  for (const std::string& file : args.files) {
    const std::string label = args.lang == "auto"
                                  ? neolex::language_label_from_path(file)
                                  : args.lang;
    const auto language = neolex::relabel_language(label, map);
    if (!language) {
      std::cerr << "neolex: " << file << ": unknown language code '" << label
                << "', file skipped\n";
      continue;
    }
    try {
      auto read = neolex::read_dictionary(file, format, *language);
      std::cerr << "neolex: " << file << " [" << *language << "]: "
                << read.entries.size() << " entries, " << read.skipped
                << " malformed lines skipped\n";
      entries.insert(entries.end(),
                     std::make_move_iterator(read.entries.begin()),
                     std::make_move_iterator(read.entries.end()));
    } catch (const neolex::IoError& e) {
      std::cerr << "neolex: " << e.what() << '\n';
      status = kExitIo;
    }
  }

  neolex::ScanOptions options;
  options.policy = policy_from(args.diacritics);
  options.glosses = glosses ? &*glosses : nullptr;
  options.workers = args.jobs;
  const neolex::ScanResult result = neolex::scan(entries, options);

  try {
    emit(args.out, neolex::format_candidates(result.candidates));
    if (!args.report.empty()) {
      bool markdown = args.report_format == "md";
      if (args.report_format.empty())
        markdown = std::filesystem::path(args.report).extension() == ".md";
      emit(args.report,
           neolex::render_report(result.stats,
                                 markdown ? neolex::ReportFormat::Markdown
                                          : neolex::ReportFormat::Tsv));
    }
  } catch (const neolex::IoError& e) {
    std::cerr << "neolex: " << e.what() << '\n';
    return kExitIo;
  }
  return status;
}

int run_validate(const std::string& ipa, const std::string& diacritics) {
  const auto result = neolex::evaluate(ipa, policy_from(diacritics));
  std::cout << (result.eligible ? "eligible" : "ineligible") << '\t'
            << neolex::reason_name(result.reason) << '\t'
            << (result.eligible ? neolex::syllabification_text(result.syllables)
                                : "-")
            << '\n';
  return kExitOk;
}

int run_transcribe(const std::string& ipa, const std::string& diacritics) {
  const auto result = neolex::evaluate(ipa, policy_from(diacritics));
  try {
    std::cout << neolex::transcribe(result) << '\n';
  } catch (const neolex::IneligibleInput& e) {
    std::cerr << "neolex: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run_dump_inventory() {
  std::cout << "ipa\tgrapheme\n";
  for (const auto& row : neolex::inventory_table())
    std::cout << row.ipa << '\t' << row.grapheme << '\n';
  return kExitOk;
}

int run_relabel(const std::string& map_path, std::vector<std::string> codes) {
  neolex::LanguageCodeMap map;
  try {
    map = neolex::LanguageCodeMap::load(map_path);
  } catch (const neolex::IoError& e) {
    std::cerr << "neolex: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "neolex: " << map_path << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (codes.empty()) {
    for (std::string line; std::getline(std::cin, line);) {
      const auto code = neolex::text::trim(line);
      if (!code.empty()) codes.emplace_back(code);
    }
  }
  int status = kExitOk;
  for (const std::string& code : codes) {
    if (auto three = neolex::relabel_language(code, map)) {
      std::cout << code << '\t' << *three << '\n';
    } else {
      std::cerr << "neolex: unknown language code '" << code << "'\n";
      status = kExitUsage;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine candidate Quechua neologisms from pronunciation "
               "dictionaries"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan dictionary files");
  scan_cmd->add_option("files", scan.files, "Dictionary files")
      ->required();
  scan_cmd->add_option("--format", scan.format, "Input format")
      ->required()
      ->check(CLI::IsMember({"open-dict", "wikipron"}));
  scan_cmd->add_option("--lang", scan.lang,
                       "Language code, or 'auto' to take it from each file name")
      ->capture_default_str();
  scan_cmd->add_option("--diacritics", scan.diacritics, "Diacritic policy")
      ->check(CLI::IsMember({"reject", "strip"}))
      ->capture_default_str();
  scan_cmd->add_option("--gloss", scan.gloss, "Gloss index file");
  scan_cmd->add_option("--out", scan.out, "Candidate TSV ('-' for stdout)")
      ->capture_default_str();
  scan_cmd->add_option("--report", scan.report,
                       "Report file ('-' for stdout); .md selects Markdown");
  scan_cmd->add_option("--report-format", scan.report_format,
                       "Report format, overriding the file extension")
      ->check(CLI::IsMember({"tsv", "md"}));
  scan_cmd->add_option("--map", scan.map, "Language code map")
      ->capture_default_str();
  scan_cmd->add_option("-j,--jobs", scan.jobs, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  std::string ipa;
  std::string diacritics = "reject";
  auto* validate_cmd =
      app.add_subcommand("validate", "Check one IPA pronunciation");
  validate_cmd->add_option("ipa", ipa, "IPA pronunciation")->required();
  validate_cmd->add_option("--diacritics", diacritics, "Diacritic policy")
      ->check(CLI::IsMember({"reject", "strip"}));

  auto* transcribe_cmd = app.add_subcommand(
      "transcribe", "Write one eligible IPA pronunciation in Quechua");
  transcribe_cmd->add_option("ipa", ipa, "IPA pronunciation")->required();
  transcribe_cmd->add_option("--diacritics", diacritics, "Diacritic policy")
      ->check(CLI::IsMember({"reject", "strip"}));

  auto* dump_cmd = app.add_subcommand(
      "dump-inventory", "Print the IPA to grapheme table");

  std::string map_path = NEOLEX_DEFAULT_LANGUAGE_MAP;
  std::vector<std::string> codes;
  auto* relabel_cmd = app.add_subcommand(
      "relabel", "Map source language labels to three-letter codes");
  relabel_cmd->add_option("--map", map_path, "Language code map")
      ->capture_default_str();
  relabel_cmd->add_option("codes", codes, "Codes (read from stdin if none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*scan_cmd) return run_scan(scan);
    if (*validate_cmd) return run_validate(ipa, diacritics);
    if (*transcribe_cmd) return run_transcribe(ipa, diacritics);
    if (*dump_cmd) return run_dump_inventory();
    if (*relabel_cmd) return run_relabel(map_path, codes);
  } catch (const std::exception& e) {
    std::cerr << "neolex: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

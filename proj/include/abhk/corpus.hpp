#pragma once

// Regression corpus: every .abhk file in a directory is built, checked and
// compared against the expectations it declares.

#include <string>
#include <vector>

#include "abhk/specdoc.hpp"

namespace abhk {

struct ExpectationResult {
  Expectation expectation;
  bool pass = false;
  std::string actual;
};

struct CorpusResult {
  std::string name;
  std::string path;
  bool ok = false;
  std::string error;  // set when the entry could not be built
  bool check_pass = false;
  std::string classification;
  std::string gk_dim;
  std::vector<ExpectationResult> results;
};

/// Computed value for one expectation key; compared after removing spaces.
ExpectationResult evaluate_expectation(const Session& s, const Expectation& e);

/// The .abhk files of dir, sorted by file name.
std::vector<std::string> list_corpus(const std::string& dir);

CorpusResult run_entry(const std::string& path, const SessionOptions& opts = {});

/// Runs all entries concurrently; results keep the order of list_corpus.
std::vector<CorpusResult> run_corpus(const std::string& dir, const SessionOptions& opts = {});

}  // namespace abhk

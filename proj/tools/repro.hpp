#pragma once

#include <string>
#include <vector>

// Reproduction suite: each case regenerates a JSON document from the
// library and diffs it against the committed golden file <id>.json.
// Returns a process exit code: 0 all pass, 1 any mismatch, 3 on a missing
// golden file or unknown id.  With update == true the documents are
// (re)written instead of diffed.
int run_repro(const std::string& only, const std::string& golden_dir, bool update, bool quiet);

std::vector<std::string> repro_case_ids();

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockcensus {

// The `verify` command line: parses args (program name excluded), runs the
// requested verification sweeps, writes JSONL or CSV rows to --out or `out`.
// Returns 0 on success, 1 if any violation or failed identity was recorded,
// 2 on usage or input errors.  Output is byte-identical for any --jobs value.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockcensus

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cobb {

// Exit codes: 0 success, 1 a verdict failed, 2 usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);

}  // namespace cobb

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaussreduce::cli {

// full command-line driver; args exclude the program name and come in natural
// order. returns the process exit code: 0 success or positive verdict,
// 1 negative verdict, 2 usage or input problem, 3 numerical failure
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gaussreduce::cli

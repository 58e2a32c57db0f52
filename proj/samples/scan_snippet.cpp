// Scans a function given on stdin (or a built-in snippet) with the bundled
// rules and prints the verdict as JSON.
#include <iostream>
#include <iterator>
#include <string>

#include "corpusqc/qualscan.hpp"

int main(int argc, char** argv) {
  using namespace corpusqc;
  std::string code =
      "def digest(path):\n"
      "    fh = open(path, 'rb')\n"
      "    return hashlib.md5(fh.read()).hexdigest()\n";
  if (argc > 1 && std::string(argv[1]) == "-") {
    code.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  const qualscan::Registry rules = qualscan::builtin_registry();
  const qualscan::ScanVerdict v = qualscan::scan_code("snippet", code, rules);
  std::cout << qualscan::to_json(v).dump(2) << "\n";
  return v.status == qualscan::Status::clean ? 0 : 1;
}

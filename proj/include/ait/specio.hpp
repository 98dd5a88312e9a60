#pragma once

#include "ait/bit_source.hpp"
#include "ait/machine.hpp"
#include "ait/rational.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace ait {

// Machine description file: line-oriented key=value ('#' comments, blank
// lines ignored).
//   kind=table            one pair=<program>:<output> line per entry
//   kind=interpreter      no further keys
//   kind=synthetic        rule=pow2_over_2n2 + max_len=N,
//                         or explicit count=<len>:<count> lines
PrefixMachine read_machine_spec(std::istream& in, const std::string& label);

// Loads either a machine spec or a saved snapshot (sniffed by magic line).
PrefixMachine load_machine_file(const std::string& path);

// Compact sequence descriptions:
//   zeros | ones
//   rational:<p/q>                    value in [0,1]
//   periodic:<pattern>                pattern repeated from the start
//   periodic:<head>:<pattern>
//   partition:<machine-file>:<T>[:<max-refine-stage>]
//       digits of the machine's partition value at temperature T,
//       certified from shrinking enclosures
std::unique_ptr<BitSource> parse_sequence_spec(const std::string& spec);

// "1/4,1/2,1" -> rationals; throws on empty or malformed entries.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace ait

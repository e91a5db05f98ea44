#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fc/decomposition.hpp"
#include "fc/kernelize.hpp"
#include "fc/multigraph.hpp"

namespace fc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format:
//   p facecover <n> <m> <t> <k>
//   e <u> <v>     (1-based, u < v, no duplicates)
//   t <v>
//   c ...         (comment, ignored)
Instance parse_instance(std::istream &in);
Instance parse_instance_file(const std::string &path);

// Vertex ids are compacted to 1..n in ascending order of the internal ids.
std::string serialize_instance(const Instance &inst);
void write_instance_file(const std::string &path, const Instance &inst);

std::string trace_json(const KernelizeResult &result);

// SPR-tree export with skeletons as clusters.
std::string spr_dot(const SprTree &t);

}  // namespace fc

#ifndef TRIGONAL_CONFLUENCE_TYPE_HPP
#define TRIGONAL_CONFLUENCE_TYPE_HPP

#include <string_view>

namespace trigonal {

/// How two branch points can collide: separating node (H), total ramification
/// (RM), or non-separating node (SG).
enum class Confluence { H, RM, SG };

constexpr std::string_view to_string(Confluence c) {
  switch (c) {
    case Confluence::H: return "H";
    case Confluence::RM: return "RM";
    case Confluence::SG: return "SG";
  }
  return "?";
}

}  // namespace trigonal

#endif

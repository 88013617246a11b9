#pragma once

#include "huffbound/closed_form.hpp"
#include "huffbound/code_tree.hpp"
#include "huffbound/source.hpp"

namespace huffbound {

// Repeatedly merges the two least-probable elements into one. Ties break
// toward the lowest indices, with the working state ordered as the
// original symbols followed by merge results in creation order.
CodeTree huffman_tree(const Source& a);

// Average codeword length minus entropy; the leaves of t must be exactly
// the symbols of a.
ClosedFormReal redundancy(const CodeTree& t, const Source& a);

ClosedFormReal average_length(const CodeTree& t, const Source& a);

}  // namespace huffbound

#ifndef LINCLASS_CLF_HPP
#define LINCLASS_CLF_HPP

#include <string>
#include <vector>

#include "linclass/mat.hpp"

namespace linclass {

// A list of codes sharing one field, as stored in a .clf file. Records may
// have different lengths and dimensions; canonical lists produced by the
// classifiers are sorted by serialized canonical form.
struct CodeList {
    int q = 2;
    std::vector<Mat> codes;
};

// Text layout: a header line "clf 1 q=<q>", then one record per code. Each
// record is a line "code n=<n> k=<k>" followed by k rows of n digits, with a
// blank line before every record. Lines starting with '#' are comments and
// may appear anywhere. parse(serialize(l)) reproduces l exactly.
std::string serialize_clf(const CodeList& list);

// Throws std::runtime_error with a 1-based line number on malformed input:
// bad header, digits outside the field, short rows, or rank-deficient
// records.
CodeList parse_clf(const std::string& text);

CodeList load_clf(const std::string& path);  // throws on unreadable file
void save_clf(const std::string& path, const CodeList& list);

}  // namespace linclass

#endif

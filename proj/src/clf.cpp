#include "linclass/clf.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linclass {

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string serialize_clf(const CodeList& list) {
    std::string out = "clf 1 q=" + std::to_string(list.q) + "\n";
    for (const Mat& g : list.codes) {
        out += "\ncode n=" + std::to_string(g.cols()) +
               " k=" + std::to_string(g.rows()) + "\n";
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < g.cols(); ++c)
                out += (char)('0' + g.get(r, c));
            out += '\n';
        }
    }
    return out;
}

CodeList parse_clf(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    auto skippable = [](const std::string& s) {
        return s.empty() || s[0] == '#';
    };

    CodeList list;
    size_t i = 0;
    while (i < lines.size() && skippable(lines[i])) ++i;
    if (i == lines.size()) fail(lines.size() + 1, "missing header");
    {
        int v = 0, q = 0, used = -1;
        if (sscanf(lines[i].c_str(), "clf %d q=%d%n", &v, &q, &used) != 2 ||
            used != (int)lines[i].size())
            fail(i + 1, "malformed header, expected \"clf 1 q=<q>\"");
        if (v != 1) fail(i + 1, "unsupported format version " + std::to_string(v));
        if (q != 2 && q != 3 && q != 4)
            fail(i + 1, "unsupported field q=" + std::to_string(q));
        list.q = q;
        ++i;
    }

    while (i < lines.size()) {
        if (skippable(lines[i])) {
            ++i;
            continue;
        }
        const size_t head = i + 1;
        int n = 0, k = 0, used = -1;
        if (sscanf(lines[i].c_str(), "code n=%d k=%d%n", &n, &k, &used) != 2 ||
            used != (int)lines[i].size())
            fail(head, "expected \"code n=<n> k=<k>\"");
        if (n < 1 || k < 1 || k > n) fail(head, "bad record shape");
        ++i;
        Mat g(list.q, k, n);
        for (int r = 0; r < k; ++r) {
            while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#') ++i;
            if (i == lines.size() || lines[i].empty())
                fail(i + 1, "record needs " + std::to_string(k) + " matrix rows");
            const std::string& row = lines[i];
            if ((int)row.size() != n)
                fail(i + 1, "row has " + std::to_string(row.size()) +
                                " characters, expected " + std::to_string(n));
            for (int c = 0; c < n; ++c) {
                const char ch = row[(size_t)c];
                if (ch < '0' || ch >= '0' + list.q)
                    fail(i + 1, std::string("symbol '") + ch +
                                    "' outside the field");
                g.set(r, c, (Felt)(ch - '0'));
            }
            ++i;
        }
        if (rank(g) < k) fail(head, "rank-deficient record");
        list.codes.push_back(std::move(g));
    }
    return list;
}

CodeList load_clf(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_clf(ss.str());
}

void save_clf(const std::string& path, const CodeList& list) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_clf(list);
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

}  // namespace linclass

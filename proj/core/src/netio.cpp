#include "wafom/netio.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "wafom/errors.hpp"

namespace wafom {

namespace {

constexpr long long kMaxHeaderValue = 1 << 20;  // reject absurd allocations

long long parse_count(const std::string& token, const char* what) {
    if (token.empty() || token.size() > 7) {
        throw NetParseError(std::string("bad ") + what + " in header");
    }
    long long v = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw NetParseError(std::string("bad ") + what + " in header");
        }
        v = v * 10 + (c - '0');
    }
    if (v > kMaxHeaderValue) {
        throw NetParseError(std::string(what) + " out of range in header");
    }
    return v;
}

std::vector<std::string> split_lines(const std::string& text) {
    if (text.empty() || text.back() != '\n') {
        throw NetParseError("file must end with a newline");
    }
    if (text.find('\r') != std::string::npos) {
        throw NetParseError("CR line endings are not accepted");
    }
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return lines;
}

}  // namespace

std::string net_to_string(const Subspace& p) {
    const int s = p.rows();
    const int n = p.cols();
    std::string out;
    out += std::to_string(s);
    out += ' ';
    out += std::to_string(n);
    out += ' ';
    out += std::to_string(p.dim());
    out += '\n';
    bool first = true;
    for (const F2Matrix& g : p.basis()) {
        if (!first) out += '\n';
        first = false;
        for (int i = 1; i <= s; ++i) {
            for (int j = 1; j <= n; ++j) {
                out += g.at(i, j) ? '1' : '0';
            }
            out += '\n';
        }
    }
    return out;
}

void write_net(std::ostream& os, const Subspace& p) { os << net_to_string(p); }

void write_net_file(const std::string& path, const Subspace& p) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw NetParseError("cannot open \"" + path + "\" for writing");
    f << net_to_string(p);
    f.flush();
    if (!f) throw NetParseError("failed writing \"" + path + "\"");
}

Subspace read_net_string(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw NetParseError("missing header line");

    // header: exactly "s n m" with single spaces
    const std::string& header = lines[0];
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : header) {
        if (c == ' ') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);
    if (tokens.size() != 3) {
        throw NetParseError("header must be \"s n m\"");
    }
    const long long s = parse_count(tokens[0], "s");
    const long long n = parse_count(tokens[1], "n");
    const long long m = parse_count(tokens[2], "m");
    if (s < 1 || n < 1) throw NetParseError("header needs s >= 1 and n >= 1");
    if (s * n > kMaxHeaderValue) {
        throw NetParseError("header dimensions out of range");
    }

    std::vector<F2Matrix> gens;
    gens.reserve(static_cast<std::size_t>(m));
    std::size_t idx = 1;
    for (long long b = 0; b < m; ++b) {
        if (b > 0) {
            if (idx >= lines.size() || !lines[idx].empty()) {
                throw NetParseError("generator blocks must be separated by one blank line");
            }
            ++idx;
        }
        F2Matrix g(static_cast<int>(s), static_cast<int>(n));
        for (long long i = 1; i <= s; ++i) {
            if (idx >= lines.size()) {
                throw NetParseError("unexpected end of file inside generator " +
                                    std::to_string(b + 1));
            }
            const std::string& row = lines[idx++];
            if (static_cast<long long>(row.size()) != n) {
                throw NetParseError("generator " + std::to_string(b + 1) + " row " +
                                    std::to_string(i) + " must have exactly " +
                                    std::to_string(n) + " digits");
            }
            for (long long j = 1; j <= n; ++j) {
                const char c = row[static_cast<std::size_t>(j - 1)];
                if (c != '0' && c != '1') {
                    throw NetParseError("generator " + std::to_string(b + 1) +
                                        " row " + std::to_string(i) +
                                        " has a character other than 0/1");
                }
                if (c == '1') g.set(static_cast<int>(i), static_cast<int>(j), true);
            }
        }
        gens.push_back(std::move(g));
    }
    if (idx != lines.size()) {
        throw NetParseError("trailing content after the last generator block");
    }
    return canonicalize(static_cast<int>(s), static_cast<int>(n), gens);
}

Subspace read_net(std::istream& is) {
    std::ostringstream buf;
    buf << is.rdbuf();
    return read_net_string(buf.str());
}

Subspace read_net_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw NetParseError("cannot open \"" + path + "\"");
    try {
        return read_net(f);
    } catch (const NetParseError& e) {
        throw NetParseError(path + ": " + e.what());
    }
}

}  // namespace wafom

#include "isct/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace isct {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    return in;
}

} // namespace

SequenceDatabase load_tokens(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    auto alphabet = std::make_shared<Alphabet>();
    std::vector<Sequence> sequences;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Sequence seq;
        std::string tok;
        while (ls >> tok) seq.items.push_back(alphabet->intern(tok));
        if (!seq.empty()) sequences.push_back(std::move(seq));
    }
    if (sequences.empty()) throw Error(path + " holds no sequences");
    return SequenceDatabase(std::move(alphabet), std::move(sequences));
}

std::string format_tokens(const SequenceDatabase& db) {
    std::string out;
    for (const auto& seq : db.sequences()) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) out += ' ';
            out += db.alphabet().symbol(seq.items[i]);
        }
        out += '\n';
    }
    return out;
}

SpmfLoadResult load_spmf(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    auto alphabet = std::make_shared<Alphabet>();
    std::vector<Sequence> sequences;
    std::vector<std::string> warnings;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        Sequence seq;
        bool terminated = false;
        bool any_token = false;
        std::size_t itemset_size = 0;
        bool flattened = false;
        while (ls >> tok) {
            any_token = true;
            if (terminated)
                throw Error(path + ":" + std::to_string(lineno) + ": content after -2");
            long value = 0;
            try {
                std::size_t used = 0;
                value = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(path + ":" + std::to_string(lineno) + ": malformed token '" + tok +
                            "'");
            }
            if (value == -2) {
                terminated = true;
            } else if (value == -1) {
                itemset_size = 0;
            } else if (value < 0) {
                throw Error(path + ":" + std::to_string(lineno) + ": malformed token '" + tok +
                            "'");
            } else {
                if (++itemset_size == 2) flattened = true;
                seq.items.push_back(alphabet->intern(std::to_string(value)));
            }
        }
        if (!any_token) continue;
        if (!terminated)
            throw Error(path + ":" + std::to_string(lineno) + ": sequence missing -2 terminator");
        if (seq.empty())
            throw Error(path + ":" + std::to_string(lineno) + ": empty sequence");
        if (flattened)
            warnings.push_back(path + ":" + std::to_string(lineno) +
                               ": multi-item itemset flattened into item order");
        sequences.push_back(std::move(seq));
    }
    if (sequences.empty()) throw Error(path + " holds no sequences");
    return SpmfLoadResult{SequenceDatabase(std::move(alphabet), std::move(sequences)),
                          std::move(warnings)};
}

std::vector<std::string> load_labels(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        std::string extra;
        if (ls >> extra) throw Error(path + ": more than one label on a line");
        labels.push_back(std::move(tok));
    }
    if (labels.empty()) throw Error(path + " holds no labels");
    return labels;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot move " + tmp + " to " + path + ": " + std::strerror(errno));
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace isct

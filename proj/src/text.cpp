#include "meshpat/text.hpp"

#include <algorithm>
#include <cctype>

namespace meshpat {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) fail(Errc::parse_error, "empty " + what);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::parse_error, "bad " + what + " '" + s + "'");
    if (s.size() > 7) fail(Errc::parse_error, what + " '" + s + "' too large");
    return std::stoi(s);
}

std::vector<int> parse_number_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (s.find(',') != std::string::npos) {
        for (const std::string& part : split(s, ',')) out.push_back(parse_int(part, what));
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(Errc::parse_error, "bad " + what + " character '" + std::string(1, c) + "'");
            out.push_back(c - '0');
        }
    }
    return out;
}

} // namespace

MeshPattern parse_pattern(const std::string& text) {
    std::size_t bar = text.find('|');
    std::string perm_part = text.substr(0, bar);
    std::string box_part = bar == std::string::npos ? std::string() : text.substr(bar + 1);

    std::vector<int> perm;
    if (perm_part != "e") {
        if (perm_part.empty()) fail(Errc::parse_error, "empty permutation (use 'e')");
        perm = parse_number_list(perm_part, "permutation value");
    }

    std::vector<GridBox> boxes;
    if (!box_part.empty()) {
        for (const std::string& pair : split(box_part, ';')) {
            std::vector<std::string> xy = split(pair, ',');
            if (xy.size() != 2) fail(Errc::parse_error, "box '" + pair + "' must be 'x,y'");
            boxes.push_back({parse_int(xy[0], "box coordinate"), parse_int(xy[1], "box coordinate")});
        }
    }
    return new_mesh_pattern(perm, boxes);
}

std::string format_perm(const std::vector<int>& perm) {
    if (perm.empty()) return "e";
    std::string out;
    bool compact = perm.size() <= 9;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(perm[i]);
    }
    return out;
}

std::string format_box(GridBox b) { return std::to_string(b.x) + "," + std::to_string(b.y); }

std::string format_pattern(const MeshPattern& m) {
    std::string out = format_perm(m.perm);
    out += '|';
    std::vector<GridBox> boxes = m.shading.boxes();
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (i > 0) out += ';';
        out += format_box(boxes[i]);
    }
    return out;
}

std::vector<int> parse_word(const std::string& text) {
    if (text.empty() || text == "e") return {};
    return parse_number_list(text, "letter");
}

std::string format_word(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string out;
    bool compact = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

} // namespace meshpat

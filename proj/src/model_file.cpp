#include "lscat/model_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"

namespace lscat {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

// Splits off whitespace-separated words, remembering their columns.
struct Word {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Word> words(const std::string& text, std::size_t limit = std::string::npos) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < text.size() && i < limit) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || i >= limit) break;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({text.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace

SullivanModel parse_model(std::string_view source) {
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(source)};
        std::string raw;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            lines.push_back({number, strip_comment(raw)});
        }
    }

    std::vector<std::pair<std::string, int>> specs;
    std::vector<std::size_t> spec_lines;
    std::size_t first_d = lines.size();
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto w = words(line.text);
        if (w.empty()) continue;
        if (w[0].text == "d") {
            first_d = li;
            break;
        }
        if (w[0].text != "generator") throw ParseError("expected 'generator' or 'd'", line.number, w[0].column);
        if (w.size() != 3) throw ParseError("expected 'generator <name> <degree>'", line.number, w[0].column);
        int degree = 0;
        try {
            std::size_t used = 0;
            degree = std::stoi(w[2].text, &used);
            if (used != w[2].text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("invalid degree '" + w[2].text + "'", line.number, w[2].column);
        }
        for (std::size_t k = 0; k < specs.size(); ++k)
            if (specs[k].first == w[1].text)
                throw ParseError("duplicate generator '" + w[1].text + "'", line.number, w[1].column);
        specs.emplace_back(w[1].text, degree);
        spec_lines.push_back(line.number);
    }

    AlgebraPtr algebra;
    try {
        algebra = Algebra::create(specs);
    } catch (const ModelError& e) {
        // Point at the first offending declaration.
        for (std::size_t k = 0; k < specs.size(); ++k) {
            try {
                Algebra::create({specs[k]});
            } catch (const ModelError&) {
                throw ParseError(e.what(), spec_lines[k], 1);
            }
        }
        throw;
    }

    std::vector<Element> images(algebra->size(), Element(algebra));
    std::vector<bool> seen(algebra->size(), false);
    for (std::size_t li = first_d; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto eq = line.text.find('=');
        const auto head = words(line.text, eq);
        if (head.empty() && eq == std::string::npos) continue;
        if (head.empty() || head[0].text != "d") {
            const std::size_t col = head.empty() ? 1 : head[0].column;
            if (!head.empty() && head[0].text == "generator")
                throw ParseError("generator declarations must precede d lines", line.number, col);
            throw ParseError("expected 'd <name> = <polynomial>'", line.number, col);
        }
        if (head.size() != 2 || eq == std::string::npos)
            throw ParseError("expected 'd <name> = <polynomial>'", line.number, head[0].column);
        auto idx = algebra->find(head[1].text);
        if (!idx) throw ParseError("unknown generator '" + head[1].text + "'", line.number, head[1].column);
        if (seen[*idx]) throw ParseError("second d line for '" + head[1].text + "'", line.number, head[1].column);
        seen[*idx] = true;
        try {
            images[*idx] = parse_element(std::string_view(line.text).substr(eq + 1), algebra);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), line.number, eq + 1 + e.column());
        }
        const auto& g = algebra->generator(*idx);
        const auto& img = images[*idx];
        if (!img.is_zero() && img.degree() != g.degree + 1)
            throw ParseError("d " + g.name + " must be homogeneous of degree " + std::to_string(g.degree + 1),
                             line.number, eq + 2);
    }
    return SullivanModel(build_differential(algebra, std::move(images)));
}

ModelFile parse_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string source = buffer.str();
    auto model = parse_model(source);
    return ModelFile{path.string(), std::move(source), std::move(model)};
}

std::string format_model(const SullivanModel& model) {
    std::ostringstream os;
    for (const auto& g : model.algebra->generators()) os << "generator " << g.name << ' ' << g.degree << '\n';
    for (const auto& g : model.algebra->generators()) {
        const auto& img = model.d.image(g.index);
        if (!img.is_zero()) os << "d " << g.name << " = " << format_element(img) << '\n';
    }
    return os.str();
}

}  // namespace lscat

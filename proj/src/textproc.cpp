#include "relkw/textproc.hpp"

#include "relkw/utf8.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relkw {

namespace {

bool is_word_char(char32_t cp) {
    return utf8::is_letter(cp) || utf8::is_digit(cp) || cp == U'_';
}

} // namespace

std::vector<Token> tokenize(std::string_view body) {
    std::u32string text = utf8::decode_all(body);
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto emit = [&](std::size_t begin, std::size_t end, bool word) {
        Token t;
        t.surface = utf8::encode_all(std::u32string_view(text).substr(begin, end - begin));
        t.position = tokens.size();
        t.is_word = word;
        tokens.push_back(std::move(t));
    };

    while (i < n) {
        if (utf8::is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (is_word_char(text[i])) {
            while (i < n) {
                if (is_word_char(text[i])) {
                    ++i;
                    continue;
                }
                // bind an internal punctuation run if a word char follows it
                std::size_t j = i;
                while (j < n && !is_word_char(text[j]) && !utf8::is_space(text[j])) ++j;
                if (j < n && j > i && is_word_char(text[j])) {
                    i = j;
                    continue;
                }
                break;
            }
            emit(begin, i, true);
        } else {
            while (i < n && !is_word_char(text[i]) && !utf8::is_space(text[i])) ++i;
            emit(begin, i, false);
        }
    }
    return tokens;
}

BaselineTagger BaselineTagger::from_files(const std::string& lexicon_en,
                                          const std::string& lexicon_de) {
    BaselineTagger tagger;
    auto load = [](const std::string& path, std::unordered_map<std::string, PosTag>& out) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open lexicon: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            std::string surface = utf8::to_lower_copy(std::string_view(line).substr(0, tab));
            std::string_view tag_s = std::string_view(line).substr(tab + 1);
            while (!tag_s.empty() && (tag_s.back() == '\r' || tag_s.back() == ' '))
                tag_s.remove_suffix(1);
            PosTag tag = PosTag::other;
            if (tag_s == "NOUN") tag = PosTag::noun;
            else if (tag_s == "ADJ") tag = PosTag::adj;
            out.emplace(std::move(surface), tag);
        }
    };
    load(lexicon_en, tagger.lexicon_en_);
    load(lexicon_de, tagger.lexicon_de_);
    return tagger;
}

void BaselineTagger::add_entry(Lang lang, std::string surface, PosTag tag) {
    auto& lex = lang == Lang::de ? lexicon_de_ : lexicon_en_;
    lex[utf8::to_lower_copy(surface)] = tag;
}

namespace {

bool all_letters(std::string_view surface) {
    std::size_t i = 0;
    while (i < surface.size()) {
        if (!utf8::is_letter(utf8::decode(surface, i))) return false;
    }
    return true;
}

bool starts_upper(std::string_view surface) {
    std::size_t i = 0;
    return !surface.empty() && utf8::is_upper(utf8::decode(surface, i));
}

bool sentence_final(const Token& t) {
    return !t.is_word && t.surface.find_first_of(".!?") != std::string::npos;
}

PosTag suffix_tag(std::string_view lowered, Lang lang) {
    static const std::vector<std::pair<std::string_view, PosTag>> kEnglish = {
        {"ness", PosTag::noun}, {"tion", PosTag::noun}, {"sion", PosTag::noun},
        {"ment", PosTag::noun}, {"ship", PosTag::noun}, {"hood", PosTag::noun},
        {"ance", PosTag::noun}, {"ence", PosTag::noun}, {"ism", PosTag::noun},
        {"ity", PosTag::noun},  {"dom", PosTag::noun},
        {"ous", PosTag::adj},   {"ful", PosTag::adj},   {"less", PosTag::adj},
        {"able", PosTag::adj},  {"ible", PosTag::adj},  {"ish", PosTag::adj},
        {"ive", PosTag::adj},
    };
    static const std::vector<std::pair<std::string_view, PosTag>> kGerman = {
        {"ung", PosTag::noun},   {"heit", PosTag::noun}, {"keit", PosTag::noun},
        {"schaft", PosTag::noun}, {"tum", PosTag::noun}, {"nis", PosTag::noun},
        {"chen", PosTag::noun},  {"lein", PosTag::noun},
        {"ig", PosTag::adj},     {"lich", PosTag::adj},  {"isch", PosTag::adj},
        {"bar", PosTag::adj},    {"sam", PosTag::adj},   {"haft", PosTag::adj},
        {"los", PosTag::adj},
    };
    const auto& rules = lang == Lang::de ? kGerman : kEnglish;
    for (const auto& [suffix, tag] : rules) {
        if (lowered.size() > suffix.size() + 2 &&
            lowered.compare(lowered.size() - suffix.size(), suffix.size(), suffix) == 0)
            return tag;
    }
    return PosTag::other;
}

} // namespace

std::vector<PosTag> BaselineTagger::operator()(const std::vector<Token>& tokens,
                                               Lang lang) const {
    const auto& lex = lang == Lang::de ? lexicon_de_ : lexicon_en_;
    std::vector<PosTag> tags;
    tags.reserve(tokens.size());
    bool sentence_start = true;
    for (const Token& t : tokens) {
        if (!t.is_word || !all_letters(t.surface)) {
            tags.push_back(PosTag::other);
            if (sentence_final(t)) sentence_start = true;
            continue;
        }
        std::string lowered = utf8::to_lower_copy(t.surface);
        PosTag tag;
        if (auto it = lex.find(lowered); it != lex.end()) {
            tag = it->second;
        } else {
            tag = suffix_tag(lowered, lang);
            if (tag == PosTag::other && lang == Lang::de && !sentence_start &&
                starts_upper(t.surface))
                tag = PosTag::noun; // German orthography: mid-sentence capitals are nouns
        }
        tags.push_back(tag);
        sentence_start = false;
    }
    return tags;
}

TaggerFn BaselineTagger::as_fn() const {
    return [this](const std::vector<Token>& tokens, Lang lang) {
        return (*this)(tokens, lang);
    };
}

void tag(std::vector<Token>& tokens, Lang lang, const TaggerFn& tagger) {
    if (lang == Lang::unknown) throw std::invalid_argument("tag: unknown language");
    std::vector<PosTag> tags = tagger(tokens, lang);
    if (tags.size() != tokens.size())
        throw std::runtime_error("tagger returned wrong number of tags");
    for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = tags[i];
}

} // namespace relkw

#include "json_locate.hpp"

#include <algorithm>

namespace fairplan::detail {

namespace {

/// Tracks how far the lexer has read so SAX callbacks can ask for a line.
struct cursor {
    char const* begin = nullptr;
    char const* at = nullptr;
};

class counting_iterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = char const*;
    using reference = char const&;

    counting_iterator() = default;
    counting_iterator(char const* p, cursor* c) : p_(p), c_(c) {}

    reference operator*() const { return *p_; }
    counting_iterator& operator++() {
        ++p_;
        if (c_ != nullptr) {
            c_->at = p_;
        }
        return *this;
    }
    counting_iterator operator++(int) {
        auto tmp = *this;
        ++*this;
        return tmp;
    }
    friend bool operator==(counting_iterator const& a, counting_iterator const& b) { return a.p_ == b.p_; }
    friend bool operator!=(counting_iterator const& a, counting_iterator const& b) { return a.p_ != b.p_; }

private:
    char const* p_ = nullptr;
    cursor* c_ = nullptr;
};

class line_index {
public:
    explicit line_index(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\n') {
                newlines_.push_back(i);
            }
        }
    }

    /// 1-based line of byte offset `pos`.
    int line_of(std::size_t pos) const {
        auto it = std::lower_bound(newlines_.begin(), newlines_.end(), pos);
        return static_cast<int>(it - newlines_.begin()) + 1;
    }

private:
    std::vector<std::size_t> newlines_;
};

using json = nlohmann::json;

class located_sax {
public:
    located_sax(located_json& out, cursor const& cur, line_index const& lines)
        : out_(out), cur_(cur), lines_(lines) {}

    bool null() { return value(json(nullptr), false); }
    bool boolean(bool v) { return value(json(v), false); }
    bool number_integer(json::number_integer_t v) { return value(json(v), true); }
    bool number_unsigned(json::number_unsigned_t v) { return value(json(v), true); }
    bool number_float(json::number_float_t v, std::string const&) { return value(json(v), true); }
    bool string(json::string_t& v) { return value(json(std::move(v)), false); }
    bool binary(json::binary_t& v) { return value(json(std::move(v)), false); }

    bool start_object(std::size_t) {
        push(json::object());
        return true;
    }
    bool end_object() {
        pop();
        return true;
    }
    bool start_array(std::size_t) {
        push(json::array());
        return true;
    }
    bool end_array() {
        pop();
        return true;
    }

    bool key(json::string_t& k) {
        frame& f = stack_.back();
        std::string const path = pointer_join(f.path, k);
        if (f.node->contains(k)) {
            out_.duplicate_keys.emplace_back(path, k);
        }
        f.key = k;
        out_.lines[path] = current_line(false);
        return true;
    }

    bool parse_error(std::size_t position, std::string const&, nlohmann::detail::exception const& ex) {
        out_.error = ex.what();
        out_.error_line = lines_.line_of(position > 0 ? position - 1 : 0);
        return false;
    }

private:
    struct frame {
        json* node;
        std::string path;
        std::string key;
    };

    int current_line(bool lookahead_consumed) const {
        std::size_t pos = static_cast<std::size_t>(cur_.at - cur_.begin);
        // numbers are terminated by one extra character the lexer already read
        if (lookahead_consumed && pos > 0) {
            --pos;
        }
        return lines_.line_of(pos > 0 ? pos - 1 : 0);
    }

    /// Inserts `v` at the current position; returns the stored node and its path.
    std::pair<json*, std::string> insert(json v) {
        if (stack_.empty()) {
            out_.root = std::move(v);
            return {&out_.root, ""};
        }
        frame& f = stack_.back();
        if (f.node->is_array()) {
            std::string path = pointer_join(f.path, std::to_string(f.node->size()));
            f.node->push_back(std::move(v));
            return {&f.node->back(), std::move(path)};
        }
        std::string path = pointer_join(f.path, f.key);
        json& slot = (*f.node)[f.key];
        slot = std::move(v);
        return {&slot, std::move(path)};
    }

    bool value(json v, bool is_number) {
        int const line = current_line(is_number);
        auto [node, path] = insert(std::move(v));
        out_.lines.try_emplace(path, line);
        return true;
    }

    void push(json container) {
        int const line = current_line(false);
        auto [node, path] = insert(std::move(container));
        out_.lines.try_emplace(path, line);
        stack_.push_back(frame{node, std::move(path), {}});
    }

    void pop() { stack_.pop_back(); }

    located_json& out_;
    cursor const& cur_;
    line_index const& lines_;
    std::vector<frame> stack_;
};

} // namespace

std::string pointer_join(std::string const& parent, std::string_view token) {
    std::string out = parent;
    out += '/';
    for (char c : token) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

located_json parse_located(std::string_view text) {
    located_json out;
    line_index const lines(text);
    cursor cur{text.data(), text.data()};
    located_sax sax(out, cur, lines);
    counting_iterator first(text.data(), &cur);
    counting_iterator last(text.data() + text.size(), nullptr);
    bool const ok = json::sax_parse(first, last, &sax);
    out.ok = ok;
    if (!ok && out.error.empty()) {
        out.error = "malformed JSON";
    }
    return out;
}

} // namespace fairplan::detail

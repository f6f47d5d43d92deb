#include <magnus/tree.hpp>

#include <functional>

namespace magnus
{

Tree Tree::leaf()
{
    return Tree();
}

Tree Tree::node(std::vector<Tree> children)
{
    if (children.empty()) {
        throw std::invalid_argument("a node needs at least one grafted subtree");
    }
    Tree t;
    t.leaves_ = 1;
    for (const auto &c : children) {
        t.leaves_ += c.leaves_;
    }
    t.children_ = std::make_shared<const std::vector<Tree>>(std::move(children));
    return t;
}

std::span<const Tree> Tree::children() const noexcept
{
    if (!children_) {
        return {};
    }
    return {children_->data(), children_->size()};
}

bool operator==(const Tree &a, const Tree &b)
{
    if (a.leaves_ != b.leaves_ || a.is_leaf() != b.is_leaf()) {
        return false;
    }
    if (a.is_leaf() || a.children_ == b.children_) {
        return true;
    }
    return *a.children_ == *b.children_;
}

TreeParseError::TreeParseError(const std::string &what, std::size_t offset)
    : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

namespace
{

// Appends every composition of `total` into `parts` positive parts, in
// lexicographic order.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t> &prefix,
                  std::vector<std::vector<std::size_t>> &out)
{
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

TreeSet enumerate(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("trees must have at least one leaf");
    }
    std::vector<std::vector<Tree>> by_size(n + 1);
    by_size[1].push_back(Tree::leaf());
    for (std::size_t m = 2; m <= n; ++m) {
        auto &level = by_size[m];
        for (std::size_t r = 1; r <= m - 1; ++r) {
            std::vector<std::vector<std::size_t>> comps;
            std::vector<std::size_t> prefix;
            compositions(m - 1, r, prefix, comps);
            for (const auto &comp : comps) {
                // Odometer over the cartesian product, last index fastest.
                std::vector<std::size_t> index(r, 0);
                while (true) {
                    std::vector<Tree> kids;
                    kids.reserve(r);
                    for (std::size_t i = 0; i < r; ++i) {
                        kids.push_back(by_size[comp[i]][index[i]]);
                    }
                    level.push_back(Tree::node(std::move(kids)));
                    bool exhausted = true;
                    for (std::size_t pos = r; pos-- > 0;) {
                        if (++index[pos] < by_size[comp[pos]].size()) {
                            exhausted = false;
                            break;
                        }
                        index[pos] = 0;
                    }
                    if (exhausted) {
                        break;
                    }
                }
            }
        }
    }
    return TreeSet{n, std::move(by_size[n])};
}

std::span<const Tree> decompose(const Tree &t)
{
    if (t.is_leaf()) {
        throw NoDecomposition();
    }
    return t.children();
}

namespace
{

void serialize_into(const Tree &t, std::string &out)
{
    if (t.is_leaf()) {
        out += 'L';
        return;
    }
    out += '(';
    bool first = true;
    for (const auto &c : t.children()) {
        if (!first) {
            out += ' ';
        }
        first = false;
        serialize_into(c, out);
    }
    out += ')';
}

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Tree parse_all()
    {
        Tree t = parse_tree();
        if (pos_ != text_.size()) {
            throw TreeParseError("trailing characters after tree", pos_);
        }
        return t;
    }

private:
    Tree parse_tree()
    {
        if (pos_ >= text_.size()) {
            throw TreeParseError("unexpected end of input", pos_);
        }
        char c = text_[pos_];
        if (c == 'L') {
            ++pos_;
            return Tree::leaf();
        }
        if (c != '(') {
            throw TreeParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        ++pos_;
        std::vector<Tree> kids;
        kids.push_back(parse_tree());
        while (true) {
            if (pos_ >= text_.size()) {
                throw TreeParseError("unterminated node", pos_);
            }
            if (text_[pos_] == ')') {
                ++pos_;
                return Tree::node(std::move(kids));
            }
            if (text_[pos_] != ' ') {
                throw TreeParseError("expected ' ' or ')'", pos_);
            }
            ++pos_;
            kids.push_back(parse_tree());
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string serialize(const Tree &t)
{
    std::string out;
    serialize_into(t, out);
    return out;
}

Tree parse(std::string_view text)
{
    return Parser(text).parse_all();
}

BigInt count(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("trees must have at least one leaf");
    }
    std::vector<BigInt> catalan(n, 0);
    catalan[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            catalan[k] += catalan[i] * catalan[k - 1 - i];
        }
    }
    return catalan[n - 1];
}

std::string to_commutator_expression(const Tree &t)
{
    std::size_t next_var = 1;
    std::function<std::string(const Tree &, std::size_t)> render = [&](const Tree &tree, std::size_t var) {
        std::string v = "t" + std::to_string(var);
        std::string expr = "H(" + v + ")";
        for (const auto &sub : tree.children()) {
            std::size_t inner = ++next_var;
            std::string iv = "t" + std::to_string(inner);
            expr = "[" + expr + ", ∫_0^{" + v + "} d" + iv + " " + render(sub, inner) + "]";
        }
        return expr;
    };
    return render(t, next_var);
}

} // namespace magnus

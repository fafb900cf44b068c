#pragma once

#include <memory>
#include <string>

#include "dgla/rational.hpp"

namespace dgla {

/// Unnormalized bracket expression over generator names: the parse-tree form
/// consumed by normalize and by the associative-envelope oracle.
class Expr {
public:
    enum class Kind { Generator, Bracket, Sum, Scale, Zero };

    static Expr generator(std::string name);
    static Expr bracket(Expr left, Expr right);
    static Expr sum(Expr left, Expr right);
    static Expr difference(Expr left, Expr right);
    static Expr scale(Rational coeff, Expr inner);
    static Expr zero();

    Kind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const Rational& coeff() const { return node_->coeff; }
    const Expr& left() const { return *node_->left; }
    const Expr& right() const { return *node_->right; }
    const Expr& inner() const { return *node_->left; }

private:
    struct Node {
        Kind kind;
        std::string name;
        Rational coeff;
        std::shared_ptr<const Expr> left, right;
    };
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace dgla

#include "dgla/expr.hpp"

namespace dgla {

Expr Expr::generator(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Generator;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::bracket(Expr left, Expr right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bracket;
    n->left = std::make_shared<const Expr>(std::move(left));
    n->right = std::make_shared<const Expr>(std::move(right));
    return Expr(std::move(n));
}

Expr Expr::sum(Expr left, Expr right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->left = std::make_shared<const Expr>(std::move(left));
    n->right = std::make_shared<const Expr>(std::move(right));
    return Expr(std::move(n));
}

Expr Expr::difference(Expr left, Expr right) {
    return sum(std::move(left), scale(Rational(-1), std::move(right)));
}

Expr Expr::scale(Rational coeff, Expr inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scale;
    n->coeff = std::move(coeff);
    n->left = std::make_shared<const Expr>(std::move(inner));
    return Expr(std::move(n));
}

Expr Expr::zero() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Zero;
    return Expr(std::move(n));
}

} // namespace dgla

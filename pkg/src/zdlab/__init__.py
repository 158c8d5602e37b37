"""Zero-divisor graphs of finite commutative rings and their multiset dimension."""

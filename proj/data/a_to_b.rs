alphabet: a b
rule: a -> b

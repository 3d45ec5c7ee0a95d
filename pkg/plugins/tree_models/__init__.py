"""Tree Models Plugin - evaluation in tree models and the T/T_e adjoint pair"""

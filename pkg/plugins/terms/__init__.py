"""Terms Plugin - parse, normalize and compare lambda terms"""

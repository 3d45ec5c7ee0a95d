"""Translation Plugin - bracket abstraction, tensor translation, CPS and left inverses"""

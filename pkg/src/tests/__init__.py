"""
Тесты для QuantumBorelVerifier.
"""

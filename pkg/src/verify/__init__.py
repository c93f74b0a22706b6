"""
Проверочные наборы: перебор допустимых конфигураций индексов и множеств,
вычисление обеих сторон тождеств в факторе и машиночитаемый отчет.
"""

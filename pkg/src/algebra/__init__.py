"""
Алгебраическое ядро: параметры квантования, свободная смешанная алгебра,
фактор по соотношениям Серра типа B, дифференциальное исчисление и генераторы.
"""

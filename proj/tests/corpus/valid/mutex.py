class Mutex(Module):
    def types(self):
        self.pc_t = Enum("IDLE", "WAIT", "CRIT")
    def locals(self):
        self.p1 = self.pc_t
        self.p2 = self.pc_t
        self.turn = int
    def init(self):
        self.p1 = IDLE
        self.p2 = IDLE
        self.turn = 1
    def next(self):
        if self.p1 == IDLE:
            self.p1 = WAIT
        elif self.p1 == WAIT and self.turn == 1:
            self.p1 = CRIT
        elif self.p1 == CRIT:
            self.p1 = IDLE
            self.turn = 2
        if self.p2 == IDLE:
            self.p2 = WAIT
        elif self.p2 == WAIT and self.turn == 2:
            self.p2 = CRIT
        elif self.p2 == CRIT:
            self.p2 = IDLE
            self.turn = 1
    def specification(self):
        return not (self.p1 == CRIT and self.p2 == CRIT)

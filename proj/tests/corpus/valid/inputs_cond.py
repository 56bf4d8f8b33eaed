class Arbiter(Module):
    def locals(self):
        self.grant = int
    def inputs(self):
        self.req0 = bool
        self.req1 = bool
    def init(self):
        self.grant = 0
    def next(self):
        if self.req0 and not self.req1:
            self.grant = 0
        elif self.req1 and not self.req0:
            self.grant = 1
        elif self.req0 and self.req1:
            self.grant = 1 - self.grant
    def specification(self):
        return self.grant == 0 or self.grant == 1
